//! The worked five-column OBRSK example, kept in its letter notation.

use crate::arrays::SkewPair;
use crate::tableau::NotchedBitableau;

/// Letter code for the twenty entries of the example.
pub const LETTERS: [(char, u32); 20] = [
    ('A', 17),
    ('B', 17),
    ('C', 14),
    ('D', 10),
    ('E', 9),
    ('F', 4),
    ('G', 3),
    ('H', 3),
    ('I', 7),
    ('J', 4),
    ('K', 25),
    ('L', 22),
    ('M', 26),
    ('N', 26),
    ('O', 25),
    ('P', 20),
    ('Q', 19),
    ('R', 15),
    ('S', 12),
    ('T', 12),
];

/// `π1` rows `b`, `a` and `π2` rows `c`, `d`, in letters.
pub const PAIR: [&str; 4] = ["ABCDE", "FGHIJ", "KLMNO", "PQRST"];

/// `(P^{(i-1)} ← a, Q^{(i-1)} ← c)` after both insertions, then `(P^{(i)}, Q^{(i)})`,
/// for `i = 1..5`. Rows are comma separated.
pub const STEPS: [[&str; 4]; 5] = [
    ["F", "O", "FT", "AO"],
    ["GT,F", "AN,O", "GT,FS", "AN,BO"],
    ["HT,GS,F", "AM,BN,O", "HT,GS,FR", "AM,BN,CO"],
    ["HIT,GS,FR", "ALM,BN,CO", "HITQ,GS,FR", "DALM,BN,CO"],
    ["HJTQ,GIS,FR", "DAKM,BLN,CO", "HJTQ,GISP,FR", "DAKM,EBLN,CO"],
];

pub fn letter(ch: char) -> Option<u32> {
    LETTERS.iter().find(|(c, _)| *c == ch).map(|(_, v)| *v)
}

/// Decode a comma separated row string such as `"HJTQ,GISP,FR"`.
pub fn decode_rows(s: &str) -> Vec<Vec<u32>> {
    if s.is_empty() {
        return Vec::new();
    }
    s.split(',')
        .map(|row| row.chars().map(|c| letter(c).expect("fixture letter")).collect())
        .collect()
}

fn decode_row(s: &str) -> Vec<u32> {
    s.chars().map(|c| letter(c).expect("fixture letter")).collect()
}

fn bitableau(p: &str, q: &str) -> NotchedBitableau {
    NotchedBitableau::from_rows(decode_rows(p), decode_rows(q)).expect("fixture shapes agree")
}

pub fn pair() -> SkewPair {
    SkewPair::new(decode_row(PAIR[0]), decode_row(PAIR[1]), decode_row(PAIR[2]), decode_row(PAIR[3]))
        .expect("fixture rows agree in length")
}

/// `(P^{(i)}, Q^{(i)})` for `i = 0..5`.
pub fn states() -> Vec<NotchedBitableau> {
    let mut v = vec![NotchedBitableau::empty()];
    v.extend(STEPS.iter().map(|s| bitableau(s[2], s[3])));
    v
}

/// The states right after the two insertions of step `i`, `i = 1..5`.
pub fn inserted_states() -> Vec<NotchedBitableau> {
    STEPS.iter().map(|s| bitableau(s[0], s[1])).collect()
}

pub fn final_bitableau() -> NotchedBitableau {
    states().pop().expect("five steps")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decoded_final_state() {
        let b = final_bitableau();
        assert_eq!(b.p().rows(), &[vec![3, 4, 12, 19], vec![3, 7, 12, 20], vec![4, 15]]);
        assert_eq!(b.q().rows(), &[vec![10, 17, 25, 26], vec![9, 17, 22, 26], vec![14, 25]]);
    }

    #[test]
    fn decoded_pair() {
        let p = pair();
        assert_eq!(p.b(), &[17, 17, 14, 10, 9]);
        assert_eq!(p.a(), &[4, 3, 3, 7, 4]);
        assert_eq!(p.c(), &[25, 22, 26, 26, 25]);
        assert_eq!(p.d(), &[20, 19, 15, 12, 12]);
    }
}
