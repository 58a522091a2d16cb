use anyhow::{anyhow, Result};
use obrsk_core::fixture;
use obrsk_core::obrsk::{obrsk, obrsk_negative_trace};
use obrsk_core::NotchedBitableau;

use crate::Outcome;

fn show(b: &NotchedBitableau) -> String {
    format!("P={:?} Q={:?}", b.p().rows(), b.q().rows())
}

pub fn run() -> Result<Outcome> {
    let pair = fixture::pair();
    let steps = obrsk_negative_trace(&pair).map_err(|e| anyhow!("{e}"))?;
    let want_states = fixture::states();
    let want_inserted = fixture::inserted_states();
    let mut ok = true;
    println!("i=0 {} ok", show(&want_states[0]));
    for (i, s) in steps.iter().enumerate() {
        let good = s.inserted == want_inserted[i] && s.state == want_states[i + 1];
        println!("i={} {} {}", i + 1, show(&s.state), if good { "ok" } else { "MISMATCH" });
        if !good {
            println!("  expected inserted {}", show(&want_inserted[i]));
            println!("  expected state    {}", show(&want_states[i + 1]));
            ok = false;
        }
    }
    let out = obrsk(&pair).map_err(|e| anyhow!("{e}"))?;
    let final_ok = out == fixture::final_bitableau();
    println!("final {} {}", show(&out), if final_ok { "ok" } else { "MISMATCH" });
    Ok(if ok && final_ok { Outcome::Ok } else { Outcome::VerificationFailed })
}
