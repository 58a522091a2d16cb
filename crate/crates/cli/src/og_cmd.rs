use anyhow::{anyhow, Result};
use obrsk_core::og::{chain_in_chains_set, enumerate_extended_chains, t_w_bounds, w_of_chain, ChainSign, ExtendedChain};
use obrsk_core::{IdElement, Root};
use serde::Serialize;

use crate::input::{id_element, print_json, roots};
use crate::{OgCmd, Outcome};

#[derive(Serialize)]
struct ChainInfo {
    chain: Vec<Root>,
    negative: Vec<Root>,
    positive: Vec<Root>,
    w_minus: Option<IdElement>,
    w_plus: Option<IdElement>,
    #[serde(skip_serializing_if = "Option::is_none")]
    in_chains_set: Option<bool>,
}

fn info(c: &ExtendedChain, beta: &IdElement) -> Result<ChainInfo> {
    let (neg, pos) = c.split();
    let w = |part: &ExtendedChain, s: ChainSign| -> Result<Option<IdElement>> {
        if part.is_empty() {
            Ok(None)
        } else {
            w_of_chain(part, beta, s).map(Some).map_err(|e| anyhow!("{e}"))
        }
    };
    Ok(ChainInfo {
        chain: c.elements().to_vec(),
        negative: neg.elements().to_vec(),
        positive: pos.elements().to_vec(),
        w_minus: w(&neg, ChainSign::Minus)?,
        w_plus: w(&pos, ChainSign::Plus)?,
        in_chains_set: None,
    })
}

pub fn run(cmd: OgCmd) -> Result<Outcome> {
    match cmd {
        OgCmd::Chains { at, alpha, gamma } => {
            let beta = id_element(at.d, &at.beta, "beta")?;
            let bounds = match (alpha, gamma) {
                (Some(a), Some(g)) => {
                    let (a, g) = (id_element(at.d, &a, "alpha")?, id_element(at.d, &g, "gamma")?);
                    t_w_bounds(&a, &g, &beta).map_err(|e| anyhow!("{e}"))?;
                    Some((a, g))
                }
                _ => None,
            };
            let mut out = Vec::new();
            for c in enumerate_extended_chains(&beta.roots()).into_iter().filter(|c| !c.is_empty()) {
                let mut i = info(&c, &beta)?;
                if let Some((a, g)) = &bounds {
                    i.in_chains_set = Some(chain_in_chains_set(&c, a, &beta, g).map_err(|e| anyhow!("{e}"))?);
                }
                out.push(i);
            }
            print_json(&out)?;
        }
        OgCmd::Wchain { at, chain } => {
            let beta = id_element(at.d, &at.beta, "beta")?;
            let elems = roots(&chain)?;
            for &x in &elems {
                beta.check_root(x).map_err(|e| anyhow!("{e}"))?;
            }
            let c = ExtendedChain::new(elems).ok_or_else(|| anyhow!("{chain:?} is not an extended chain"))?;
            print_json(&info(&c, &beta)?)?;
        }
    }
    Ok(Outcome::Ok)
}
