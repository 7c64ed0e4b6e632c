//! Brute-force reference checks over plain vectors. Shares no code with the library.
#![allow(dead_code)]

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub repeat: Option<(usize, usize)>,
    pub reverse: Option<(usize, usize)>,
    pub negative_reverse: Option<(usize, usize)>,
    pub good: bool,
}

impl OracleReport {
    pub fn special(&self) -> bool {
        self.repeat.is_none() && self.reverse.is_none() && self.negative_reverse.is_none()
    }
}

pub fn window(terms: &[u32], i: usize, n: usize) -> Vec<u32> {
    (0..n).map(|k| terms[(i + k) % terms.len()]).collect()
}

/// O(m^2 n) pairwise comparison of all windows.
pub fn oracle(terms: &[u32], q: u32, n: usize) -> OracleReport {
    let m = terms.len();
    let ws: Vec<Vec<u32>> = (0..m).map(|i| window(terms, i, n)).collect();
    let rev = |w: &Vec<u32>| -> Vec<u32> { w.iter().rev().copied().collect() };
    let negrev = |w: &Vec<u32>| -> Vec<u32> { w.iter().rev().map(|&x| (q - x) % q).collect() };
    let mut repeat = None;
    let mut reverse = None;
    let mut negative_reverse = None;
    for i in 0..m {
        for j in 0..m {
            if repeat.is_none() && i < j && ws[i] == ws[j] {
                repeat = Some((i, j));
            }
            if reverse.is_none() && ws[i] == rev(&ws[j]) {
                reverse = Some((i, j));
            }
            if negative_reverse.is_none() && ws[i] == negrev(&ws[j]) {
                negative_reverse = Some((i, j));
            }
        }
    }
    OracleReport {
        repeat,
        reverse,
        negative_reverse,
        good: good(terms, n),
    }
}

/// Longest cyclic zero run at most n - 2, and not all zeros.
pub fn good(terms: &[u32], n: usize) -> bool {
    if terms.iter().all(|&x| x == 0) {
        return false;
    }
    let m = terms.len();
    let mut longest = 0;
    for start in 0..m {
        let mut run = 0;
        while run < m && terms[(start + run) % m] == 0 {
            run += 1;
        }
        longest = longest.max(run);
    }
    longest + 2 <= n
}

pub fn weight_mod(terms: &[u32], q: u32) -> u32 {
    (terms.iter().map(|&x| x as u64).sum::<u64>() % q as u64) as u32
}
