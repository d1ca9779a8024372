//! The biword bijection taking `(ndes, fmax, 31-2, 2-31, MAD)` to
//! `(wex, fix, cros, nest, inv)`.

use serde::Serialize;

use crate::permstat::{thto_k, Permutation};

/// The intermediate words of the construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Biword {
    /// Descent bottoms, increasing.
    pub f: Vec<usize>,
    /// Descent tops, each with inversion bottom number equal to its right
    /// embracing number.
    pub f_prime: Vec<usize>,
    /// Nondescent bottoms, increasing.
    pub g: Vec<usize>,
    /// Nondescent tops, each with inversion top number equal to its right
    /// embracing number.
    pub g_prime: Vec<usize>,
    /// Right embracing number of each value `1..=n`.
    pub embracing: Vec<usize>,
    /// `f g` over `f' g'` after sorting columns by the bottom row.
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
}

pub fn csz(sigma: &Permutation) -> Permutation {
    csz_trace(sigma).0
}

pub fn csz_trace(sigma: &Permutation) -> (Permutation, Biword) {
    let n = sigma.len();
    let w = sigma.word();
    let embracing: Vec<usize> = (1..=n).map(|k| thto_k(sigma, k)).collect();

    let mut tops_d = Vec::new();
    let mut tops_nd = Vec::new();
    let mut bottoms_d = Vec::new();
    let mut bottoms_nd = Vec::new();
    if n > 0 {
        bottoms_nd.push(w[0]);
    }
    for i in 0..n {
        if i + 1 < n && w[i] > w[i + 1] {
            tops_d.push(w[i]);
            bottoms_d.push(w[i + 1]);
        } else {
            tops_nd.push(w[i]);
            if i + 1 < n {
                bottoms_nd.push(w[i + 1]);
            }
        }
    }
    bottoms_d.sort_unstable();
    bottoms_nd.sort_unstable();

    // Placed letters are all larger, so `e` letters to the left is exactly
    // `e` inversions with `a` as bottom.
    tops_d.sort_unstable_by(|a, b| b.cmp(a));
    let mut f_prime: Vec<usize> = Vec::with_capacity(tops_d.len());
    for a in tops_d {
        f_prime.insert(embracing[a - 1], a);
    }
    // Dually, placed letters are all smaller.
    tops_nd.sort_unstable();
    let mut g_prime: Vec<usize> = Vec::with_capacity(tops_nd.len());
    for b in tops_nd {
        let pos = g_prime.len() - embracing[b - 1];
        g_prime.insert(pos, b);
    }

    let mut tau = vec![0; n];
    for (t, b) in bottoms_d
        .iter()
        .zip(&f_prime)
        .chain(bottoms_nd.iter().zip(&g_prime))
    {
        tau[b - 1] = *t;
    }
    let biword = Biword {
        f: bottoms_d,
        f_prime,
        g: bottoms_nd,
        g_prime,
        embracing,
        top: tau.clone(),
        bottom: (1..=n).collect(),
    };
    (
        Permutation::new(tau).expect("columns pair a permutation"),
        biword,
    )
}
