use anyhow::{anyhow, Context, Result};
use obrsk_core::og::id_leq;
use obrsk_core::IdElement;
use obrsk_ideal::ideal::generators;
use obrsk_ideal::{comparable_triples, verify_main_theorem, TermOrder, TripleReport};
use rayon::prelude::*;
use serde::Serialize;

use crate::input::{id_element, print_json};
use crate::{IdealCmd, Outcome, TripleArgs};

fn triple(t: &TripleArgs) -> Result<(IdElement, IdElement, IdElement)> {
    let a = id_element(t.d, &t.alpha, "alpha")?;
    let b = id_element(t.d, &t.beta, "beta")?;
    let g = id_element(t.d, &t.gamma, "gamma")?;
    check_order(&a, &b, &g)?;
    Ok((a, b, g))
}

fn check_order(a: &IdElement, b: &IdElement, g: &IdElement) -> Result<()> {
    if !(id_leq(a, b)? && id_leq(b, g)?) {
        anyhow::bail!("need alpha <= beta <= gamma, got {a} {b} {g}");
    }
    Ok(())
}

#[derive(Serialize)]
struct Counts {
    initial: usize,
    chains: usize,
    standard: usize,
    total: usize,
}

#[derive(Serialize)]
struct Entry<'a> {
    triple: [&'a IdElement; 3],
    degree: u32,
    counts: Counts,
    standard_rank: usize,
    pass: bool,
    #[serde(skip_serializing_if = "<[String]>::is_empty")]
    only_initial: &'a [String],
    #[serde(skip_serializing_if = "<[String]>::is_empty")]
    only_chains: &'a [String],
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    d: u32,
    max_degree: u32,
    triples: usize,
    results: Vec<Entry<'a>>,
    pass: bool,
}

fn entries(r: &TripleReport) -> Vec<Entry<'_>> {
    r.degrees
        .iter()
        .map(|d| Entry {
            triple: [&r.alpha, &r.beta, &r.gamma],
            degree: d.degree,
            counts: Counts { initial: d.initial, chains: d.chains, standard: d.standard, total: d.monomials },
            standard_rank: d.standard_rank,
            pass: d.pass,
            only_initial: &d.only_initial,
            only_chains: &d.only_chains,
        })
        .collect()
}

pub fn run(cmd: IdealCmd) -> Result<Outcome> {
    match cmd {
        IdealCmd::Generators { triple: t } => {
            let (a, b, g) = triple(&t)?;
            let order = TermOrder::new(&b).map_err(|e| anyhow!("{e}"))?;
            for (tau, f) in generators(&a, &b, &g, &order).map_err(|e| anyhow!("{e}"))? {
                println!("{tau}: {}", f.to_text(&order));
            }
            Ok(Outcome::Ok)
        }
        IdealCmd::Hilbert { triple: t, max_degree } => {
            let (a, b, g) = triple(&t)?;
            let r = verify_main_theorem(&a, &b, &g, max_degree).map_err(|e| anyhow!("{e}"))?;
            println!("degree total initial standard");
            for d in &r.degrees {
                println!("{} {} {} {}", d.degree, d.monomials, d.initial, d.standard);
            }
            Ok(if r.pass { Outcome::Ok } else { Outcome::VerificationFailed })
        }
        IdealCmd::VerifyMain { d, all_triples, alpha, beta, gamma, max_degree, jobs } => {
            let triples = if all_triples {
                if d == 0 {
                    anyhow::bail!("--d must be positive");
                }
                comparable_triples(d)
            } else {
                let t = TripleArgs {
                    d,
                    alpha: alpha.expect("required by clap"),
                    beta: beta.expect("required by clap"),
                    gamma: gamma.expect("required by clap"),
                };
                vec![triple(&t)?]
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
                .context("starting worker threads")?;
            let reports: Vec<TripleReport> = pool.install(|| {
                triples
                    .par_iter()
                    .map(|(a, b, g)| verify_main_theorem(a, b, g, max_degree))
                    .collect::<std::result::Result<_, _>>()
            })
            .map_err(|e| anyhow!("{e}"))?;
            let pass = reports.iter().all(|r| r.pass);
            for r in reports.iter().filter(|r| !r.pass) {
                for dr in r.degrees.iter().filter(|x| !x.pass) {
                    eprintln!(
                        "FAIL {} {} {} degree {}: only in in(I): {:?}; only chain-divisible: {:?}",
                        r.alpha, r.beta, r.gamma, dr.degree, dr.only_initial, dr.only_chains
                    );
                }
            }
            let report =
                VerifyReport { d, max_degree, triples: reports.len(), results: reports.iter().flat_map(entries).collect(), pass };
            print_json(&report)?;
            Ok(if pass { Outcome::Ok } else { Outcome::VerificationFailed })
        }
    }
}
