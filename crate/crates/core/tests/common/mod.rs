#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<u32>> {
    let mut cur: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(k) = (1..cur.len()).rev().find(|&k| cur[k - 1] < cur[k]) else {
            return out;
        };
        let l = (k..cur.len()).rev().find(|&l| cur[l] > cur[k - 1]).unwrap();
        cur.swap(k - 1, l);
        cur[k..].reverse();
        out.push(cur.clone());
    }
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    let mut v: Vec<f64> = (1..=n).map(|k| k as f64).collect();
    v.shuffle(rng);
    v
}

/// Distinct uniform floats in [-1000, 1000).
pub fn random_floats<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let v: f64 = rng.gen_range(-1000.0..1000.0);
        if seen.insert(v.to_bits()) {
            out.push(v);
        }
    }
    out
}

/// Nearest strictly smaller key to the left, by scanning.
pub fn brute_pd<T: PartialOrd>(keys: &[T]) -> Vec<usize> {
    (0..keys.len())
        .map(|j| (0..j).rev().find(|&k| keys[k] < keys[j]).map_or(0, |k| j - k))
        .collect()
}

/// Nearest strictly smaller key to the right, by scanning.
pub fn brute_rpd<T: PartialOrd>(keys: &[T]) -> Vec<usize> {
    (0..keys.len())
        .map(|j| (j + 1..keys.len()).find(|&k| keys[k] < keys[j]).map_or(0, |k| k - j))
        .collect()
}
