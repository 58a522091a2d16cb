use anyhow::{anyhow, bail, Result};
use obrsk_core::obrsk::{obrsk, obrsk_negative_trace, robrsk_nonvanishing};
use obrsk_core::{NotchedBitableau, SkewPair};
use serde::Serialize;

use crate::input::{print_json, read_json};
use crate::{ObrskCmd, Outcome};

#[derive(Serialize)]
struct TraceStep<'a> {
    i: usize,
    #[serde(rename = "P^(i)")]
    p: &'a [Vec<u32>],
    #[serde(rename = "Q^(i)")]
    q: &'a [Vec<u32>],
}

#[derive(Serialize)]
struct Traced<'a> {
    steps: Vec<TraceStep<'a>>,
    result: &'a NotchedBitableau,
}

pub fn run(cmd: ObrskCmd) -> Result<Outcome> {
    match cmd {
        ObrskCmd::Apply { input, trace } => {
            let pair: SkewPair = read_json(input.as_deref())?;
            let violations = pair.violations();
            if !violations.is_empty() {
                let list: Vec<String> = violations.iter().map(ToString::to_string).collect();
                bail!("invalid pair, violated conditions: {}", list.join(", "));
            }
            let out = obrsk(&pair).map_err(|e| anyhow!("{e}"))?;
            if trace {
                if !pair.is_negative() {
                    bail!("--trace needs a negative pair");
                }
                let steps = obrsk_negative_trace(&pair).map_err(|e| anyhow!("{e}"))?;
                let empty = NotchedBitableau::empty();
                let mut rows = vec![TraceStep { i: 0, p: empty.p().rows(), q: empty.q().rows() }];
                for (i, s) in steps.iter().enumerate() {
                    rows.push(TraceStep { i: i + 1, p: s.state.p().rows(), q: s.state.q().rows() });
                }
                print_json(&Traced { steps: rows, result: &out })?;
            } else {
                print_json(&out)?;
            }
        }
        ObrskCmd::Invert { input } => {
            let bt: NotchedBitableau = read_json(input.as_deref())?;
            match bt.is_skew_symmetric() {
                Ok(true) => {}
                Ok(false) => bail!("not skew-symmetric: the duality property fails"),
                Err(e) => bail!("not skew-symmetric: {e}"),
            }
            let pair = robrsk_nonvanishing(&bt).map_err(|e| anyhow!("{e}"))?;
            print_json(&pair)?;
        }
    }
    Ok(Outcome::Ok)
}
