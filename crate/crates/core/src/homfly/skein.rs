//! HOMFLY by skein resolution toward a descending diagram, independent of the
//! Hecke route.
//!
//! The closure is walked component by component from the top of the lowest
//! unvisited position. The first crossing met from below is switched and
//! smoothed (`P₊ = v²P₋ + vzP₀`, `P₋ = v⁻²P₊ − v⁻¹zP₀`); once every crossing
//! is first met from above the diagram is a stacked unlink with
//! `P = D^{c−1}`.

use std::collections::HashMap;

use super::hecke::loop_value;
use super::HomflyError;
use crate::arith::{LaurentPoly2, Sign};
use crate::braid::{BraidWord, Letter};

pub const SKEIN_CROSSING_CAP: usize = 12;

pub fn skein_oracle(word: &BraidWord) -> Result<LaurentPoly2, HomflyError> {
    if word.len() > SKEIN_CROSSING_CAP {
        return Err(HomflyError::CrossingCapExceeded { crossings: word.len(), cap: SKEIN_CROSSING_CAP });
    }
    let mut memo = HashMap::new();
    Ok(resolve(word.strands(), word.letters().to_vec(), &mut memo))
}

/// Index of the first crossing met from below on the walk, if any.
fn first_bad_crossing(strands: usize, letters: &[Letter]) -> Option<usize> {
    let mut seen = vec![false; letters.len()];
    let mut started = vec![false; strands];
    for start in 0..strands {
        if started[start] {
            continue;
        }
        let mut pos = start;
        loop {
            started[pos] = true;
            for (idx, l) in letters.iter().enumerate() {
                let left = l.gen - 1;
                if pos != left && pos != left + 1 {
                    continue;
                }
                // σ_i: the strand entering at the left position passes over.
                let over = (pos == left) == (l.exp == Sign::Plus);
                if !seen[idx] {
                    seen[idx] = true;
                    if !over {
                        return Some(idx);
                    }
                }
                pos = if pos == left { left + 1 } else { left };
            }
            if pos == start {
                break;
            }
        }
    }
    None
}

fn resolve(strands: usize, letters: Vec<Letter>, memo: &mut HashMap<Vec<Letter>, LaurentPoly2>) -> LaurentPoly2 {
    if let Some(p) = memo.get(&letters) {
        return p.clone();
    }
    let result = match first_bad_crossing(strands, &letters) {
        None => {
            let c = BraidWord::new(strands, letters.clone()).expect("valid word").components();
            loop_value().pow(c as u32 - 1)
        }
        Some(idx) => {
            let mut switched = letters.clone();
            switched[idx] = letters[idx].inverse();
            let mut smoothed = letters.clone();
            smoothed.remove(idx);
            let ps = resolve(strands, switched, memo);
            let p0 = resolve(strands, smoothed, memo);
            match letters[idx].exp {
                Sign::Plus => ps.shift(2, 0) + p0.shift(1, 1),
                Sign::Minus => ps.shift(-2, 0) - p0.shift(-1, 1),
            }
        }
    };
    memo.insert(letters, result.clone());
    result
}
