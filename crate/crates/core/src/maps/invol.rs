//! Sign-reversing involutions on `S_n` and on coderangements.

use crate::error::Error;
use crate::permstat::{Family, Permutation};

/// Position (1-based) of the largest value that is a double ascent or a
/// double descent, under the given boundary letters.
fn largest_double(word: &[usize], left: usize, right: usize) -> Option<(usize, bool)> {
    let n = word.len();
    let at = |i: usize| match i {
        0 => left,
        i if i == n + 1 => right,
        i => word[i - 1],
    };
    let mut best: Option<(usize, bool)> = None;
    for m in 1..=n {
        let (a, b, c) = (at(m - 1), at(m), at(m + 1));
        let kind = if a < b && b < c {
            Some(true)
        } else if a > b && b > c {
            Some(false)
        } else {
            None
        };
        if let Some(ascent) = kind {
            if best.is_none_or(|(p, _)| word[p - 1] < b) {
                best = Some((m, ascent));
            }
        }
    }
    best
}

/// Moves the letter at 1-based position `m` to sit just before position `k`
/// (`k` may be `n+1`).
fn move_before(word: &[usize], m: usize, k: usize) -> Vec<usize> {
    let mut w = word.to_vec();
    let v = w.remove(m - 1);
    w.insert(k - 2, v);
    w
}

/// Moves the letter at position `m` to sit just after position `k < m`
/// (`k` may be `0`).
fn move_after(word: &[usize], m: usize, k: usize) -> Vec<usize> {
    let mut w = word.to_vec();
    let v = w.remove(m - 1);
    w.insert(k, v);
    w
}

/// Boundary `σ_0 = σ_{n+1} = 0`. A double ascent moves right in front of the
/// first smaller letter; a double descent moves left behind the last
/// smaller letter. Fixed points are exactly `A'_n`.
pub fn invol_phi(sigma: &Permutation) -> Permutation {
    let w = sigma.word();
    let n = w.len();
    let Some((m, ascent)) = largest_double(w, 0, 0) else {
        return sigma.clone();
    };
    let v = w[m - 1];
    let word = if ascent {
        let k = (m + 1..=n).find(|&k| w[k - 1] < v).unwrap_or(n + 1);
        move_before(w, m, k)
    } else {
        let k = (1..m).rev().find(|&k| w[k - 1] < v).unwrap_or(0);
        move_after(w, m, k)
    };
    Permutation::new(word).expect("a move keeps a permutation")
}

/// Boundary `σ_0 = 0`, `σ_{n+1} = n+1`; defined on coderangements. A double
/// ascent moves left behind the last larger letter; a double descent moves
/// right in front of the first larger letter. Fixed points are exactly
/// `A''_n`.
pub fn invol_psi(sigma: &Permutation) -> Result<Permutation, Error> {
    if !Family::Dstar.contains(sigma) {
        return Err(Error::Precondition(format!(
            "{sigma} is not a coderangement"
        )));
    }
    let w = sigma.word();
    let n = w.len();
    let Some((m, ascent)) = largest_double(w, 0, n + 1) else {
        return Ok(sigma.clone());
    };
    let v = w[m - 1];
    let word = if ascent {
        let k = (1..m)
            .rev()
            .find(|&k| w[k - 1] > v)
            .ok_or_else(|| Error::Internal(format!("no larger letter left of {v} in {sigma}")))?;
        move_after(w, m, k)
    } else {
        let k = (m + 1..=n).find(|&k| w[k - 1] > v).unwrap_or(n + 1);
        move_before(w, m, k)
    };
    Ok(Permutation::new(word).expect("a move keeps a permutation"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permstat::{basic_stats, family_iter};

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(invol_phi(&perm("123")), perm("132"));
        assert_eq!(invol_phi(&perm("213")), perm("213"));
        assert_eq!(invol_psi(&perm("21")).unwrap(), perm("21"));
        assert_eq!(invol_psi(&perm("4321")).unwrap(), perm("4213"));
        assert!(matches!(
            invol_psi(&perm("12")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn phi_is_sign_reversing_involution() {
        for n in 1..=6 {
            for sigma in family_iter(Family::S, n) {
                let tau = invol_phi(&sigma);
                assert_eq!(invol_phi(&tau), sigma);
                let fixed = tau == sigma;
                assert_eq!(fixed, Family::Aprime.contains(&sigma), "{sigma}");
                if !fixed {
                    let (s, t) = (basic_stats(&sigma), basic_stats(&tau));
                    assert_eq!(s.toht, t.toht);
                    assert_eq!(s.ndes.abs_diff(t.ndes), 1);
                }
            }
        }
    }

    #[test]
    fn psi_is_sign_reversing_involution() {
        for n in 1..=7 {
            for sigma in family_iter(Family::Dstar, n) {
                let tau = invol_psi(&sigma).unwrap();
                assert_eq!(invol_psi(&tau).unwrap(), sigma);
                let fixed = tau == sigma;
                assert_eq!(fixed, Family::Adoubleprime.contains(&sigma), "{sigma}");
                if !fixed {
                    let (s, t) = (basic_stats(&sigma), basic_stats(&tau));
                    assert_eq!(t.toht as i64 - s.toht as i64, t.ndes as i64 - s.ndes as i64);
                    assert_eq!(s.ndes.abs_diff(t.ndes), 1);
                    assert_eq!(s.mad, t.mad);
                }
            }
        }
    }
}
