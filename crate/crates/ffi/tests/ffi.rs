use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use garside_ffi::*;

unsafe fn parse(ctx: *const GsContext, text: &str) -> *mut GsElement {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(gs_element_parse(ctx, c.as_ptr(), &mut out), GsStatus::GsOk);
    out
}

unsafe fn text(ctx: *const GsContext, e: *const GsElement) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(gs_element_format(ctx, e, &mut s), GsStatus::GsOk);
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    gs_string_free(s);
    out
}

#[test]
fn braid_round_trip() {
    unsafe {
        let mut ctx = ptr::null_mut();
        assert_eq!(gs_context_new_braid(2, &mut ctx), GsStatus::GsOk);
        let a = parse(ctx, "s1^-1");

        let mut sign = GsSign::GsInG1;
        assert_eq!(gs_sign(ctx, a, &mut sign), GsStatus::GsOk);
        assert_eq!(sign, GsSign::GsNegative);

        let mut u = ptr::null_mut();
        let mut k = 0i64;
        assert_eq!(gs_delta_form(ctx, a, &mut u, &mut k), GsStatus::GsOk);
        assert_eq!((text(ctx, u).as_str(), k), ("s2^2 s1 s2^2", -1));
        let mut d = 0usize;
        assert_eq!(gs_depth(ctx, u, &mut d), GsStatus::GsOk);
        assert_eq!(d, 1);
        assert_eq!(gs_depth(ctx, a, &mut d), GsStatus::GsNotPositive);

        let mut inv = ptr::null_mut();
        assert_eq!(gs_element_inverse(ctx, a, &mut inv), GsStatus::GsOk);
        let mut prod = ptr::null_mut();
        assert_eq!(gs_element_multiply(ctx, a, inv, &mut prod), GsStatus::GsOk);
        let one = parse(ctx, "1");
        let mut eq = false;
        assert_eq!(gs_element_equal(ctx, prod, one, &mut eq), GsStatus::GsOk);
        assert!(eq);

        let eps = [1i8, 1];
        let mut c = 5;
        assert_eq!(gs_compare(ctx, eps.as_ptr(), 2, one, inv, &mut c), GsStatus::GsOk);
        assert_eq!(c, -1);
        assert_eq!(gs_compare(ctx, eps.as_ptr(), 1, one, inv, &mut c), GsStatus::GsInvalidParameter);

        for e in [a, u, inv, prod, one] {
            gs_element_free(e);
        }
        gs_context_free(ctx);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut ctx = ptr::null_mut();
        assert_eq!(gs_context_new_dihedral(3, &mut ctx), GsStatus::GsInvalidParameter);
        assert!(!CStr::from_ptr(gs_last_error()).to_bytes().is_empty());
        assert_eq!(gs_context_new_dihedral(5, &mut ctx), GsStatus::GsOk);

        let bad = CString::new("s t x").unwrap();
        let mut e = ptr::null_mut();
        assert_eq!(gs_element_parse(ctx, bad.as_ptr(), &mut e), GsStatus::GsParseError);
        let msg = CStr::from_ptr(gs_last_error()).to_str().unwrap();
        assert!(msg.contains("byte 4"), "{msg}");
        assert_eq!(gs_element_parse(ctx, ptr::null(), &mut e), GsStatus::GsNullPointer);

        let mut other = ptr::null_mut();
        assert_eq!(gs_context_new_dihedral(5, &mut other), GsStatus::GsOk);
        let x = parse(ctx, "s.t.s");
        let y = parse(other, "t");
        let mut out = ptr::null_mut();
        assert_eq!(gs_element_multiply(ctx, x, y, &mut out), GsStatus::GsContextMismatch);
        let mut sign = GsSign::GsNegative;
        assert_eq!(gs_sign(other, y, &mut sign), GsStatus::GsOk);
        assert_eq!(sign, GsSign::GsInG1);

        gs_element_free(x);
        gs_element_free(y);
        gs_context_free(ctx);
        gs_context_free(other);
    }
}

fn compiler() -> Option<&'static str> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok())
}

#[test]
fn header_compiles_as_c_and_cpp() {
    let Some(cc) = compiler() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = std::env::temp_dir().join(format!("garside-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("probe.c");
    std::fs::write(
        &src,
        "#include \"garside.h\"\nint main(void) { GsContext *c = 0; return gs_context_new_braid(2, &c) == GS_OK ? 0 : 1; }\n",
    )
    .unwrap();
    for lang in ["c", "c++"] {
        let status = Command::new(cc)
            .args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang])
            .arg("-I")
            .arg(&include)
            .arg(&src)
            .status()
            .unwrap();
        assert!(status.success(), "{lang} syntax check failed");
    }
    std::fs::remove_dir_all(&dir).ok();
}
