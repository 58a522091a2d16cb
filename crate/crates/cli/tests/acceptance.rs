//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use obrsk_core::bounded::{chain_witnesses, dual_chain_pairs};
use obrsk_core::enumerate::{bound_candidates, negative_pairs, skew_bitableaux, valid_pairs};
use obrsk_core::multiset::{plane_compare, PlaneMultiset};
use obrsk_core::obrsk::{obrsk, obrsk_negative, robrsk};
use obrsk_core::og::{enumerate_id, is_quotient_monomial, Root};
use obrsk_core::{IdElement, NotchedBitableau, Sign, SkewPair};
use obrsk_ideal::order::verify_strict_total;
use obrsk_ideal::pfaffian::{generator_matrix, pfaffian_generator};
use obrsk_ideal::{comparable_triples, SparsePoly, TermOrder};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn ogtool(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ogtool")).args(args).output().expect("spawn ogtool")
}

fn per_degree(it: impl Iterator<Item = usize>) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for d in it {
        *m.entry(d).or_insert(0) += 1;
    }
    m
}

fn c1_fixture_replay() -> Outcome {
    let start = Instant::now();
    let out = ogtool(&["fixture", "replay"]);
    let elapsed = start.elapsed();
    let text = String::from_utf8_lossy(&out.stdout);
    let ok_lines = text.lines().filter(|l| l.ends_with(" ok")).count();
    let pass = out.status.code() == Some(0) && ok_lines == 7 && !text.contains("MISMATCH") && elapsed < Duration::from_secs(1);
    outcome(pass, format!("{ok_lines}/7 states match, {elapsed:.2?}"))
}

fn c2_bijection() -> Outcome {
    let pairs = negative_pairs(6, 2);
    let mut bad = 0;
    for p in &pairs {
        let ok = match obrsk_negative(p) {
            Ok(b) => {
                b.is_skew_symmetric() == Ok(true)
                    && (b.is_empty() || b.classify_sign() == Ok(Sign::Negative))
                    && b.degree() == p.degree()
                    && robrsk(&b).as_ref() == Ok(p)
            }
            Err(_) => false,
        };
        bad += usize::from(!ok);
    }
    let codomain: Vec<NotchedBitableau> = skew_bitableaux(6, 4)
        .into_iter()
        .filter(|b| b.is_empty() || b.classify_sign() == Ok(Sign::Negative))
        .collect();
    for b in &codomain {
        let ok = robrsk(b).and_then(|p| obrsk_negative(&p)).as_ref() == Ok(b);
        bad += usize::from(!ok);
    }
    let dom = per_degree(pairs.iter().map(SkewPair::degree));
    let cod = per_degree(codomain.iter().map(NotchedBitableau::degree));
    outcome(
        bad == 0 && dom == cod,
        format!("{} pairs, {} bitableaux, per-degree counts {dom:?} vs {cod:?}, {bad} round-trip failures", pairs.len(), codomain.len()),
    )
}

fn c3_involutions() -> Outcome {
    let mut bad = 0;
    let mut nb = 0;
    for b in skew_bitableaux(6, 4) {
        if matches!(b.classify_sign(), Ok(Sign::Vanishing)) {
            continue;
        }
        nb += 1;
        let ok = b.iota().and_then(|i| i.iota()).as_ref() == Ok(&b);
        bad += usize::from(!ok);
    }
    let pairs = valid_pairs(6, 2);
    for p in &pairs {
        let l_ok = p.l_involution().and_then(|l| l.l_involution()).as_ref() == Ok(p);
        let (u1, u2) = p.psi();
        let psi_ok = SkewPair::psi_inv(&u1, &u2).as_ref() == Ok(p);
        bad += usize::from(!(l_ok && psi_ok));
    }
    outcome(bad == 0, format!("iota on {nb} bitableaux, L and psi on {} pairs, {bad} failures", pairs.len()))
}

/// `T ≤ up` for every witness, per `T`, and `down ≤ W` for every witness, per `W`.
fn pair_bound_flags(p: &SkewPair, ts: &[PlaneMultiset], ws: &[PlaneMultiset]) -> (Vec<bool>, Vec<bool>) {
    let witnesses: Vec<(PlaneMultiset, PlaneMultiset)> =
        dual_chain_pairs(p).iter().map(|s| chain_witnesses(s).expect("witness")).collect();
    let tf = ts
        .iter()
        .map(|t| witnesses.iter().all(|(up, _)| plane_compare(t, up).map(|o| o.is_le()).unwrap_or(false)))
        .collect();
    let wf = ws
        .iter()
        .map(|w| witnesses.iter().all(|(_, down)| plane_compare(down, w).map(|o| o.is_le()).unwrap_or(false)))
        .collect();
    (tf, wf)
}

fn c4_boundedness() -> Outcome {
    let ts = bound_candidates(6, 2, true);
    let ws = bound_candidates(6, 2, false);
    let mut pairs = negative_pairs(6, 2);
    let negatives = pairs.len();
    pairs.extend(valid_pairs(6, 2).into_iter().filter(|p| p.is_nonvanishing() && !p.is_negative()));
    let mut checked = 0usize;
    let mut bad = 0usize;
    for p in &pairs {
        let b = obrsk(p).expect("nonvanishing pair");
        let (tf, wf) = pair_bound_flags(p, &ts, &ws);
        for (t, &t_ok) in ts.iter().zip(&tf) {
            if !t_ok {
                continue;
            }
            for (w, &w_ok) in ws.iter().zip(&wf) {
                if !w_ok {
                    continue;
                }
                checked += 1;
                if b.bounded_by(t, w) != Ok(true) {
                    bad += 1;
                }
            }
        }
    }
    outcome(
        bad == 0,
        format!(
            "{} pairs ({negatives} negative), {} x {} bounds, {checked} bounded instances, {bad} violations",
            pairs.len(),
            ts.len(),
            ws.len()
        ),
    )
}

fn verify_json(args: &[&str]) -> (bool, usize) {
    let out = ogtool(args);
    let v: serde_json::Value = match serde_json::from_slice(&out.stdout) {
        Ok(v) => v,
        Err(_) => return (false, 0),
    };
    let triples = v["triples"].as_u64().unwrap_or(0) as usize;
    (out.status.code() == Some(0) && v["pass"] == true, triples)
}

fn c5_main_theorem() -> Outcome {
    let (p2, n2) = verify_json(&["ideal", "verify-main", "--d", "2", "--all-triples", "--max-degree", "4"]);
    let (p3, n3) = verify_json(&["ideal", "verify-main", "--d", "3", "--all-triples", "--max-degree", "4"]);
    let (p4, _) = verify_json(&[
        "ideal", "verify-main", "--d", "4", "--alpha", "1,2,5,6", "--beta", "1,3,5,7", "--gamma", "2,4,6,8", "--max-degree", "3",
    ]);
    outcome(
        p2 && p3 && p4 && n2 > 0 && n3 > 0,
        format!("d=2: {n2} triples {p2}, d=3: {n3} triples {p3}, d=4 spot {p4}"),
    )
}

fn monomials(roots: &[Root], max_deg: usize) -> Vec<Vec<Root>> {
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<(usize, Vec<Root>)> = vec![(0, Vec::new())];
    for _ in 0..max_deg {
        let mut next = Vec::new();
        for (from, m) in &frontier {
            for i in *from..roots.len() {
                let mut m = m.clone();
                m.push(roots[i]);
                out.push(m.clone());
                next.push((i, m));
            }
        }
        frontier = next;
    }
    out
}

fn c6_route_agreement() -> Outcome {
    let mut checked = 0;
    let mut bad = 0;
    let triples = comparable_triples(3);
    for (a, b, g) in &triples {
        for m in monomials(&b.roots(), 3) {
            checked += 1;
            if is_quotient_monomial(&m, a, b, g).is_err() {
                bad += 1;
            }
        }
    }
    outcome(bad == 0, format!("{} triples, {checked} monomials, {bad} disagreements", triples.len()))
}

fn c7_term_order() -> Outcome {
    let start = Instant::now();
    let mut betas = 0;
    let mut bad = 0;
    for d in 1..=5 {
        for beta in enumerate_id(d) {
            betas += 1;
            let ok = verify_strict_total(&beta.roots()).is_ok() && TermOrder::new(&beta).is_ok();
            bad += usize::from(!ok);
        }
    }
    let elapsed = start.elapsed();
    outcome(bad == 0 && elapsed < Duration::from_secs(30), format!("{betas} choices of beta, {bad} failures, {elapsed:.2?}"))
}

fn perm_sign(p: &[usize]) -> bool {
    let inv: usize = (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum();
    inv % 2 == 0
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

fn determinant(a: &[Vec<SparsePoly>], nvars: usize) -> SparsePoly {
    let mut out = SparsePoly::zero(nvars);
    for p in permutations(a.len()) {
        let mut t = SparsePoly::one(nvars);
        for (i, &j) in p.iter().enumerate() {
            t = t.mul(&a[i][j]);
            if t.is_zero() {
                break;
            }
        }
        out = if perm_sign(&p) { out.add(&t) } else { out.sub(&t) };
    }
    out
}

fn c8_pfaffian() -> Outcome {
    let mut cases: Vec<(IdElement, IdElement)> = Vec::new();
    for d in [3, 4] {
        for beta in enumerate_id(d) {
            for theta in enumerate_id(d) {
                cases.push((theta, beta.clone()));
            }
        }
    }
    let mut checked = 0;
    let mut bad = 0;
    for (theta, beta) in &cases {
        let o = TermOrder::new(beta).expect("order");
        let a = generator_matrix(theta, beta, &o).expect("matrix");
        if a.len() > 6 {
            continue;
        }
        checked += 1;
        let pf = pfaffian_generator(theta, beta, &o).expect("pfaffian");
        if pf.mul(&pf) != determinant(&a, o.num_vars()) {
            bad += 1;
        }
    }
    outcome(bad == 0 && checked > 0, format!("{checked} generators with n <= 6, {bad} mismatches"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("fixture replay", c1_fixture_replay),
        ("OBRSK bijection on negative pairs", c2_bijection),
        ("involutions", c3_involutions),
        ("boundedness preservation", c4_boundedness),
        ("initial ideal equals chains ideal", c5_main_theorem),
        ("quotient-monomial routes agree", c6_route_agreement),
        ("term order is a strict total order", c7_term_order),
        ("Pfaffian squares equal determinants", c8_pfaffian),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("{tag} criterion {}: {name}: {} [{:.2?}]", n + 1, o.detail, start.elapsed());
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
