//! Command-line front end.
//!
//! [`run_command`] does all the work and returns the exit code with both
//! output streams, so the binary is a thin wrapper and tests need no process.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::garside::{Element, Forms, Garside};
use crate::order::{Comparison, OrderChain, OrderedModel};
use crate::verifier::{
    check_condition_a, check_condition_b, check_cone_axioms, check_lemma_suite, cross_validate_signs,
    CheckReport, EnumerationBudget,
};
use crate::word::{format_element, format_factors, format_signed, parse_element, WordContext};

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "garside", about = "Normal forms, signs and left orders in braid and dihedral Artin groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Debug)]
struct Opts {
    /// Group family.
    #[arg(long, global = true, value_enum)]
    group: Option<Family>,
    /// Number of generators for `an` (braids on n + 1 strands).
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Coxeter parameter for `i2`.
    #[arg(long, global = true)]
    m: Option<usize>,
    /// One `+` or `-` per level of the order chain.
    #[arg(long, global = true, allow_hyphen_values = true)]
    epsilon: Option<String>,
    /// Longest positive word enumerated by `verify`
    #[arg(long, global = true)]
    max_len: Option<usize>,
    /// Largest power of θ enumerated by `verify`
    #[arg(long, global = true)]
    max_power: Option<usize>,
    /// Random samples drawn by `verify cone` and `verify cross`
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Seed for the sampler
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    An,
    I2,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Right greedy normal form.
    Nf { word: String },
    /// Δ-form `a·Δ^k` with `a` unmovable.
    DeltaForm { word: String },
    /// Alternating form of a positive word with respect to (H, G₁).
    AltForm { word: String },
    /// Depth of a positive word.
    Depth { word: String },
    /// Sign with respect to the standard Dehornoy structure.
    Sign { word: String },
    /// Compare two elements in the left order given by --epsilon.
    Compare { left: String, right: String },
    /// Image of a dihedral element under the embedding into a braid group.
    Embed { word: String },
    /// Sort words increasingly in the left order given by --epsilon.
    Sort { words: Vec<String> },
    /// Run a verification.
    Verify {
        #[arg(value_enum)]
        check: Check,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Check {
    #[value(name = "condA")]
    CondA,
    #[value(name = "condB")]
    CondB,
    Cone,
    Lemmas,
    Cross,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::CondA => "condA",
            Check::CondB => "condB",
            Check::Cone => "cone",
            Check::Lemmas => "lemmas",
            Check::Cross => "cross",
        }
    }
}

enum Failure {
    Usage(String),
    Verification(Answer),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Answer {
    name: &'static str,
    inputs: Value,
    result: Value,
    text: String,
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let json = cli.opts.json;
    let ctx = match context(&cli.opts) {
        Ok(c) => c,
        Err(e) => return usage(e.to_string()),
    };
    let answer = match &ctx {
        GroupContext::Braid(b) => dispatch(b, &ctx, &cli),
        GroupContext::Dihedral(d) => dispatch(d, &ctx, &cli),
    };
    match answer {
        Ok(a) => Outcome {
            code: 0,
            stdout: render(json, &ctx, a.name, &a.inputs, &a.result, &a.text),
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => usage(msg),
        Err(Failure::Verification(a)) => Outcome {
            code: 1,
            stdout: render(json, &ctx, a.name, &a.inputs, &a.result, &a.text),
            stderr: "verification failed\n".into(),
        },
    }
}

fn usage(msg: String) -> Outcome {
    Outcome {
        code: 2,
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
    }
}

fn render(json: bool, ctx: &GroupContext, command: &str, inputs: &Value, result: &Value, text: &str) -> String {
    if json {
        let doc = json!({
            "command": command,
            "group": ctx.to_string(),
            "inputs": inputs,
            "result": result,
        });
        format!("{}\n", serde_json::to_string_pretty(&doc).expect("JSON values serialize"))
    } else {
        text.to_string()
    }
}

fn context(opts: &Opts) -> Result<GroupContext> {
    match opts.group {
        Some(Family::An) => match opts.n {
            Some(n) => GroupContext::braid(n),
            None => Err(Error::InvalidParameter("--group an needs --n".into())),
        },
        Some(Family::I2) => match opts.m {
            Some(m) => GroupContext::dihedral(m),
            None => Err(Error::InvalidParameter("--group i2 needs --m".into())),
        },
        None => Err(Error::InvalidParameter("--group is required".into())),
    }
}

fn parse_epsilon(text: Option<&str>, levels: usize) -> Result<Vec<i8>> {
    let Some(text) = text else {
        return Ok(vec![1; levels]);
    };
    let eps: Vec<i8> = text
        .chars()
        .map(|c| match c {
            '+' => Ok(1),
            '-' => Ok(-1),
            _ => Err(Error::InvalidParameter(format!("--epsilon accepts only + and -, found `{c}`"))),
        })
        .collect::<Result<_>>()?;
    if eps.len() != levels {
        return Err(Error::InvalidParameter(format!(
            "--epsilon needs {levels} characters for this group, got {}",
            eps.len()
        )));
    }
    Ok(eps)
}

fn budget(opts: &Opts) -> EnumerationBudget {
    let d = EnumerationBudget::default();
    EnumerationBudget {
        max_len: opts.max_len.unwrap_or(d.max_len),
        max_power: opts.max_power.unwrap_or(d.max_power),
        samples: opts.samples.unwrap_or(d.samples),
        seed: opts.seed.unwrap_or(d.seed),
    }
}

fn delta_form_value<M: WordContext>(model: &M, alpha: &Element<M::Simple>) -> (Value, String) {
    let form = model.delta_form(alpha);
    let text = format_element(model, &form.unmovable);
    let shown = match form.power {
        0 => text.clone(),
        k => format!("{text} · D^{k}"),
    };
    (json!({ "unmovable": text, "power": form.power }), shown)
}

fn dispatch<M>(model: &M, ctx: &GroupContext, cli: &Cli) -> std::result::Result<Answer, Failure>
where
    M: OrderedModel + WordContext,
{
    let opts = &cli.opts;
    let parse = |w: &str| parse_element(model, w);
    let answer = |name, inputs, result, text: String| Answer { name, inputs, result, text };
    match &cli.command {
        Command::Nf { word } => {
            let a = parse(word)?;
            let factors = format_factors(model, &a);
            let text = format!(
                "factors: [{}]\nomega power: {}\nelement: {}\n",
                factors.join(" | "),
                a.power(),
                format_element(model, &a)
            );
            let result = json!({ "factors": factors, "omega_power": a.power(), "element": format_element(model, &a) });
            Ok(answer("nf", json!({ "word": word }), result, text))
        }
        Command::DeltaForm { word } => {
            let a = parse(word)?;
            let (value, shown) = delta_form_value(model, &a);
            Ok(answer("delta-form", json!({ "word": word }), value, format!("{shown}\n")))
        }
        Command::AltForm { word } => {
            let a = parse(word)?;
            let s = model.dehornoy_structure()?;
            let form = model.alternating_form(&a, s.h(), s.g1())?;
            let factors: Vec<String> = form.factors.iter().map(|f| format_element(model, f)).collect();
            let text = format!(
                "factors: ({})\nbreadth: {}\ndepth: {}\n",
                factors.join(", "),
                form.breadth,
                form.depth
            );
            let result = json!({ "factors": factors, "breadth": form.breadth, "depth": form.depth });
            Ok(answer("alt-form", json!({ "word": word }), result, text))
        }
        Command::Depth { word } => {
            let a = parse(word)?;
            let d = model.dehornoy_structure()?.depth(&a)?;
            Ok(answer("depth", json!({ "word": word }), json!({ "depth": d }), format!("{d}\n")))
        }
        Command::Sign { word } => {
            let a = parse(word)?;
            let s = model.dehornoy_structure()?;
            let sign = s.sign(&a)?;
            let (form, shown) = delta_form_value(model, &a);
            let depth = s.depth(&model.delta_form(&a).unmovable)?;
            let result = json!({ "sign": sign, "delta_form": form, "depth": depth });
            let text = format!("{sign}\ndelta form: {shown}\ndepth: {depth}\n");
            Ok(answer("sign", json!({ "word": word }), result, text))
        }
        Command::Compare { left, right } => {
            let eps = parse_epsilon(opts.epsilon.as_deref(), OrderChain::depth_of(model))?;
            let chain = OrderChain::standard(model, &eps)?;
            let c = chain.compare(&parse(left)?, &parse(right)?)?;
            let inputs = json!({ "left": left, "right": right, "epsilon": eps });
            Ok(answer("compare", inputs, json!({ "comparison": c.to_string() }), format!("{c}\n")))
        }
        Command::Sort { words } => {
            let eps = parse_epsilon(opts.epsilon.as_deref(), OrderChain::depth_of(model))?;
            let chain = OrderChain::standard(model, &eps)?;
            let mut items = Vec::new();
            for w in words {
                items.push((w.clone(), parse(w)?));
            }
            // Insertion sort so that comparison errors surface.
            let mut sorted: Vec<(String, Element<M::Simple>)> = Vec::new();
            for (w, a) in items {
                let mut pos = sorted.len();
                for (i, (_, b)) in sorted.iter().enumerate() {
                    if chain.compare(&a, b)? == Comparison::Less {
                        pos = i;
                        break;
                    }
                }
                sorted.insert(pos, (w, a));
            }
            let out: Vec<String> = sorted.into_iter().map(|(w, _)| w).collect();
            let text = out.iter().map(|w| format!("{w}\n")).collect();
            Ok(answer("sort", json!({ "words": words, "epsilon": eps }), json!({ "sorted": out }), text))
        }
        Command::Embed { word } => {
            let GroupContext::Dihedral(d) = ctx else {
                return Err(Failure::Usage("embed needs --group i2".into()));
            };
            let alpha = parse_element(d, word)?;
            let target = crate::braid::BraidModel::crisp_target_context(d.m())?;
            let image = d.crisp_embed(&alpha, &target)?;
            let letters = d.crisp_embed_word(&d.signed_word(&alpha))?;
            let signed: Vec<_> = letters
                .iter()
                .map(|l| (crate::garside::Atom(l.index as usize - 1), l.exp))
                .collect();
            let word_text = format_signed(&target, &signed);
            let nf = format_element(&target, &image);
            let tctx = GroupContext::Braid(target);
            let text = format!("target: {tctx}\nword: {word_text}\nelement: {nf}\n");
            let result = json!({ "target": tctx.to_string(), "word": word_text, "element": nf });
            Ok(answer("embed", json!({ "word": word }), result, text))
        }
        Command::Verify { check } => {
            let b = budget(opts);
            let s = model.dehornoy_structure()?;
            let report: CheckReport = match check {
                Check::CondA => check_condition_a(&s, b.max_power),
                Check::CondB => check_condition_b(&s, b.max_len),
                Check::Cone => {
                    let eps = parse_epsilon(opts.epsilon.as_deref(), OrderChain::depth_of(model))?;
                    check_cone_axioms(&OrderChain::standard(model, &eps)?, &b)
                }
                Check::Lemmas => check_lemma_suite(ctx, &b),
                Check::Cross => cross_validate_signs(ctx, &b),
            };
            let value = serde_json::to_value(&report).expect("reports serialize");
            let text = report.to_string();
            let a = answer("verify", json!({ "check": check.name(), "budget": b }), value, text);
            if report.pass {
                Ok(a)
            } else {
                Err(Failure::Verification(a))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        run_command(std::iter::once("garside").chain(args.iter().copied()))
    }

    #[test]
    fn sign_of_s1_inverse() {
        let o = run(&["sign", "--group", "an", "--n", "2", "s1^-1"]);
        assert_eq!(o.code, 0, "{o:?}");
        assert!(o.stdout.starts_with("negative\n"));
    }

    #[test]
    fn epsilon_length_is_checked() {
        let o = run(&["compare", "--group", "an", "--n", "2", "--epsilon", "+", "1", "s1"]);
        assert_eq!(o.code, 2);
    }
}
