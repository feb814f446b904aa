//! Partitions, signatures, interlacing, Gelfand-Tsetlin patterns and chains.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of non-negative integers, trailing zeros dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Partition(Vec<i64>);

/// A weakly decreasing integer vector of fixed length `n`; parts may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Signature(Vec<i64>);

fn check_decreasing(parts: &[i64]) -> Result<()> {
    for (i, w) in parts.windows(2).enumerate() {
        if w[0] < w[1] {
            return Err(Error::InvalidInput(format!(
                "part {} ({}) is smaller than part {} ({})",
                i + 1,
                w[0],
                i + 2,
                w[1]
            )));
        }
    }
    Ok(())
}

impl Partition {
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        check_decreasing(&parts)?;
        if let Some(i) = parts.iter().position(|&p| p < 0) {
            return Err(Error::InvalidInput(format!("part {} ({}) is negative", i + 1, parts[i])));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.part(0);
        Partition((1..=m).map(|j| self.0.iter().filter(|&&p| p >= j).count() as i64).collect())
    }

    /// `m_i`, the number of parts equal to `i` (for `i >= 1`).
    pub fn multiplicity(&self, i: i64) -> i64 {
        self.0.iter().filter(|&&p| p == i).count() as i64
    }

    /// `n(lambda) = sum (i-1) lambda_i`.
    pub fn n_stat(&self) -> i64 {
        self.0.iter().enumerate().map(|(i, p)| i as i64 * p).sum()
    }

    /// True when `other` fits inside `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn padded(&self, n: usize) -> Vec<i64> {
        (0..n).map(|i| self.part(i)).collect()
    }

    pub fn to_signature(&self, n: usize) -> Result<Signature> {
        if self.len() > n {
            return Err(Error::InvalidInput(format!("{} has more than {} parts", self, n)));
        }
        Ok(Signature(self.padded(n)))
    }
}

impl Signature {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        check_decreasing(&parts)?;
        Ok(Signature(parts))
    }

    pub fn zeros(n: usize) -> Self {
        Signature(vec![0; n])
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn min_part(&self) -> Option<i64> {
        self.0.last().copied()
    }

    /// Adds `m` to every part.
    pub fn shifted(&self, m: i64) -> Signature {
        Signature(self.0.iter().map(|p| p + m).collect())
    }

    pub fn to_partition(&self) -> Option<Partition> {
        Partition::new(self.0.clone()).ok()
    }

    /// `mu_j <= self_j` for every part of `mu` (which may be shorter).
    pub fn contains(&self, mu: &Signature) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn push(&self, last: i64) -> Result<Signature> {
        let mut p = self.0.clone();
        p.push(last);
        Signature::new(p)
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<i64> {
    fn from(p: Partition) -> Vec<i64> {
        p.0
    }
}

impl TryFrom<Vec<i64>> for Signature {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Signature::new(v)
    }
}

impl From<Signature> for Vec<i64> {
    fn from(p: Signature) -> Vec<i64> {
        p.0
    }
}

fn join(parts: &[i64]) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", join(&self.0))
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join(&self.0))
    }
}

/// Parses a comma-separated integer list; the empty string is the empty list.
pub fn parse_parts(s: &str) -> Result<Vec<i64>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .enumerate()
        .map(|(i, x)| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidInput(format!("part {} ({:?}) is not an integer", i + 1, x.trim())))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl FromStr for Signature {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Signature::new(parse_parts(s)?)
    }
}

/// `lambda_j >= mu_j >= lambda_{j+1}` for all `j`; requires `len(mu) = len(lambda) - 1`.
pub fn interlaces(lam: &Signature, mu: &Signature) -> Result<bool> {
    if mu.len() + 1 != lam.len() {
        return Err(Error::InvalidInput(format!(
            "interlacing needs lengths n and n-1, got {} and {}",
            lam.len(),
            mu.len()
        )));
    }
    Ok(mu.0.iter().enumerate().all(|(j, &m)| lam.0[j] >= m && m >= lam.0[j + 1]))
}

/// `mu` inside `lambda` with at most one box per column.
pub fn horizontal_strip(lam: &Partition, mu: &Partition) -> bool {
    if !lam.contains(mu) {
        return false;
    }
    // Equivalent to lambda_{i+1} <= mu_i for all i.
    (0..lam.len()).all(|i| lam.part(i + 1) <= mu.part(i))
}

/// Dominance order `a >= b` for partitions of the same size.
pub fn dominates(a: &Partition, b: &Partition) -> bool {
    if a.size() != b.size() {
        return false;
    }
    let n = a.len().max(b.len());
    let (mut sa, mut sb) = (0, 0);
    for i in 0..n {
        sa += a.part(i);
        sb += b.part(i);
        if sa < sb {
            return false;
        }
    }
    true
}

/// All `beta` with `mu <= beta`, `beta` interlacing `lambda`, and at most `n - 1` parts,
/// in ascending lexicographic order.
pub fn enumerate_between(lam: &Partition, mu: &Partition, n: usize) -> Vec<Partition> {
    if n == 0 || !lam.contains(mu) {
        return Vec::new();
    }
    let m = n - 1;
    let ranges: Vec<(i64, i64)> = (0..m)
        .map(|j| (mu.part(j).max(lam.part(j + 1)), lam.part(j)))
        .collect();
    if ranges.iter().any(|(lo, hi)| lo > hi) || mu.len() > m {
        return Vec::new();
    }
    box_product(&ranges)
        .into_iter()
        .map(|v| Partition::new(v).expect("interlacing vectors are partitions"))
        .collect()
}

/// All signatures of length `n - 1` interlacing `lam` and containing `mu`.
pub fn signatures_between(lam: &Signature, mu: &Signature) -> Vec<Signature> {
    let m = lam.len().saturating_sub(1);
    if mu.len() != m {
        return Vec::new();
    }
    let ranges: Vec<(i64, i64)> = (0..m).map(|j| (mu.0[j].max(lam.0[j + 1]), lam.0[j])).collect();
    if ranges.iter().any(|(lo, hi)| lo > hi) {
        return Vec::new();
    }
    box_product(&ranges).into_iter().map(Signature).collect()
}

fn box_product(ranges: &[(i64, i64)]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &(lo, hi) in ranges {
        let mut next = Vec::new();
        for prefix in &out {
            for v in lo..=hi {
                let mut p = prefix.clone();
                p.push(v);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Partitions of `size` with at most `max_len` parts, in descending lexicographic order.
pub fn partitions(size: i64, max_len: usize) -> Vec<Partition> {
    fn rec(rem: i64, max_part: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=rem.min(max_part)).rev() {
            cur.push(p);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if size >= 0 {
        rec(size, size, max_len, &mut Vec::new(), &mut out);
    }
    out
}

/// Partitions of every size `0..=max_size` with at most `max_len` parts.
pub fn partitions_up_to(max_size: i64, max_len: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(|s| partitions(s, max_len)).collect()
}

/// All partitions contained in `lam`.
pub fn subpartitions(lam: &Partition) -> Vec<Partition> {
    let ranges: Vec<(i64, i64)> = lam.0.iter().map(|&p| (0, p)).collect();
    box_product(&ranges)
        .into_iter()
        .filter_map(|v| Partition::new(v).ok())
        .collect()
}

/// Signatures `mu` of length `n - 1` with `mu_j <= lam_j` and
/// `sum_j (lam_j - mu_j) <= budget`, in ascending lexicographic order.
pub fn sub_signatures(lam: &Signature, budget: i64) -> Vec<Signature> {
    fn rec(lam: &[i64], j: usize, m: usize, budget: i64, cur: &mut Vec<i64>, out: &mut Vec<Signature>) {
        if j == m {
            out.push(Signature(cur.clone()));
            return;
        }
        let hi = match cur.last() {
            Some(&prev) => lam[j].min(prev),
            None => lam[j],
        };
        let lo = lam[j] - budget;
        for v in lo..=hi {
            cur.push(v);
            rec(lam, j + 1, m, budget - (lam[j] - v), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if budget < 0 || lam.is_empty() {
        return out;
    }
    rec(&lam.0, 0, lam.len() - 1, budget, &mut Vec::new(), &mut out);
    out
}

/// The canonical shift of a pair: both moved by the same integer so the smallest part is 1.
pub fn canonical_shift(lam: &Signature, mu: &Signature) -> (Signature, Signature) {
    let min = lam.0.iter().chain(&mu.0).copied().min().unwrap_or(1);
    (lam.shifted(1 - min), mu.shifted(1 - min))
}

/// `S = (mu^(0) >= mu^(1) >= ...)` with level `i` of length `n - i`, each level
/// contained in the previous one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Chain {
    levels: Vec<Signature>,
}

impl Chain {
    pub fn new(levels: Vec<Signature>) -> Result<Self> {
        let n = levels.first().map(|l| l.len()).unwrap_or(0);
        for (i, l) in levels.iter().enumerate() {
            if l.len() != n - i {
                return Err(Error::InvalidInput(format!("level {i} has length {}, expected {}", l.len(), n - i)));
            }
            if i > 0 && !levels[i - 1].contains(l) {
                return Err(Error::InvalidInput(format!("level {i} is not contained in level {}", i - 1)));
            }
        }
        Ok(Chain { levels })
    }

    pub fn levels(&self) -> &[Signature] {
        &self.levels
    }

    pub fn n(&self) -> usize {
        self.levels.len()
    }
}

/// `wt(S) = (|mu^(n-1)|, |mu^(n-2)| - |mu^(n-1)|, ..., |mu^(0)| - |mu^(1)|)`.
pub fn chain_weight(chain: &Chain) -> Vec<i64> {
    let l = &chain.levels;
    let n = l.len();
    (0..n)
        .map(|j| {
            let top = l[n - 1 - j].size();
            let below = if j == 0 { 0 } else { l[n - j].size() };
            top - below
        })
        .collect()
}

/// Chains starting at `lam` in which each level drops in size by at most `cutoff`.
pub fn chains_in_window(lam: &Signature, cutoff: i64) -> Vec<Chain> {
    fn rec(prefix: &mut Vec<Signature>, cutoff: i64, out: &mut Vec<Chain>) {
        let last = prefix.last().expect("nonempty prefix").clone();
        if last.len() == 1 {
            out.push(Chain { levels: prefix.clone() });
            return;
        }
        let budget = cutoff - last.min_part().expect("nonempty level");
        for mu in sub_signatures(&last, budget) {
            prefix.push(mu);
            rec(prefix, cutoff, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if !lam.is_empty() {
        rec(&mut vec![lam.clone()], cutoff, &mut out);
    }
    out
}

/// A Gelfand-Tsetlin pattern stored on the doubled lattice: `rows[i][j] = 2 * entry`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GtPattern {
    rows: Vec<Vec<i64>>,
}

impl GtPattern {
    /// Builds a pattern from doubled entries, checking shape and interlacing.
    pub fn from_doubled(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.len() != n {
            return Err(Error::InvalidInput(format!("pattern has {} rows for a top row of length {n}", rows.len())));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n - i {
                return Err(Error::InvalidInput(format!("row {i} has length {}, expected {}", r.len(), n - i)));
            }
            if i > 0 {
                let up = &rows[i - 1];
                for j in 0..r.len() {
                    if !(up[j] >= r[j] && r[j] >= up[j + 1]) || (up[j] - r[j]) % 2 != 0 {
                        return Err(Error::InvalidInput(format!("row {i} does not interlace row {}", i - 1)));
                    }
                }
            }
        }
        Ok(GtPattern { rows })
    }

    pub fn doubled_rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Entries as exact strings, `"3/2"` for half-integers.
    pub fn display_rows(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| r.iter().map(|&x| half_string(x)).collect()).collect()
    }
}

pub fn half_string(doubled: i64) -> String {
    if doubled % 2 == 0 {
        (doubled / 2).to_string()
    } else {
        format!("{doubled}/2")
    }
}

impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.display_rows().iter().map(|r| r.join(",")).collect();
        write!(f, "[{}]", rows.join(" | "))
    }
}

/// Doubled offset `(k-1)(n+1-2j)` added to part `j` (1-based) of every level.
fn gt_offset(n: usize, j: usize, k: u32) -> i64 {
    (k as i64 - 1) * (n as i64 + 1 - 2 * j as i64)
}

fn check_gap_bound(chain: &Chain, k: u32) -> Result<()> {
    for (i, w) in chain.levels.windows(2).enumerate() {
        let (up, down) = (w[0].parts(), w[1].parts());
        for j in 1..up.len() {
            if up[j] - down[j - 1] > k as i64 - 1 {
                return Err(Error::RejectedChain(format!(
                    "level {} part {} exceeds level {} part {} by more than k-1 = {}",
                    i,
                    j + 1,
                    i + 1,
                    j,
                    k as i64 - 1
                )));
            }
        }
    }
    Ok(())
}

/// The Gelfand-Tsetlin pattern of shape `lambda + (k-1) rho` attached to a chain.
pub fn gt_index(chain: &Chain, k: u32) -> Result<GtPattern> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    check_gap_bound(chain, k)?;
    let n = chain.n();
    let rows = chain
        .levels
        .iter()
        .map(|l| l.parts().iter().enumerate().map(|(j, &p)| 2 * p + gt_offset(n, j + 1, k)).collect())
        .collect();
    GtPattern::from_doubled(rows)
}

/// The chain mapped to `pattern` by [`gt_index`], if one exists.
pub fn gt_preimage(pattern: &GtPattern, k: u32) -> Option<Chain> {
    let n = pattern.n();
    let mut levels = Vec::with_capacity(n);
    for row in &pattern.rows {
        let mut parts = Vec::with_capacity(row.len());
        for (j, &x) in row.iter().enumerate() {
            let v = x - gt_offset(n, j + 1, k);
            if v % 2 != 0 {
                return None;
            }
            parts.push(v / 2);
        }
        levels.push(Signature::new(parts).ok()?);
    }
    let chain = Chain::new(levels).ok()?;
    check_gap_bound(&chain, k).ok()?;
    Some(chain)
}

/// All Gelfand-Tsetlin patterns with the given doubled top row.
pub fn gt_patterns(top_doubled: &[i64]) -> Vec<GtPattern> {
    fn rec(rows: &mut Vec<Vec<i64>>, out: &mut Vec<GtPattern>) {
        let last = rows.last().expect("nonempty").clone();
        if last.len() <= 1 {
            out.push(GtPattern { rows: rows.clone() });
            return;
        }
        let mut nexts = vec![Vec::new()];
        for j in 0..last.len() - 1 {
            let mut grown = Vec::new();
            for p in &nexts {
                let mut v = last[j];
                while v >= last[j + 1] {
                    let mut q: Vec<i64> = p.clone();
                    q.push(v);
                    grown.push(q);
                    v -= 2;
                }
            }
            nexts = grown;
        }
        nexts.reverse();
        for nx in nexts {
            rows.push(nx);
            rec(rows, out);
            rows.pop();
        }
    }
    let mut out = Vec::new();
    if !top_doubled.is_empty() {
        rec(&mut vec![top_doubled.to_vec()], &mut out);
    }
    out
}

/// The doubled top row of `lambda + (k-1) rho_n`.
pub fn shifted_shape_doubled(lam: &Signature, k: u32) -> Vec<i64> {
    let n = lam.len();
    lam.parts().iter().enumerate().map(|(j, &p)| 2 * p + gt_offset(n, j + 1, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }
    fn s(v: &[i64]) -> Signature {
        Signature::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn interlacing() {
        assert!(interlaces(&s(&[2, 0]), &s(&[1])).unwrap());
        assert!(!interlaces(&s(&[2, 0]), &s(&[3])).unwrap());
        assert!(interlaces(&s(&[2, 1, 0]), &s(&[2, 0])).unwrap());
        assert!(interlaces(&s(&[2, 1]), &s(&[1, 0])).is_err());
    }

    #[test]
    fn strips() {
        assert!(horizontal_strip(&p(&[2, 1]), &p(&[1])));
        assert!(!horizontal_strip(&p(&[2, 2]), &p(&[1])));
        assert!(horizontal_strip(&p(&[3, 1]), &p(&[3, 1])));
    }

    #[test]
    fn between() {
        assert_eq!(enumerate_between(&p(&[2, 1]), &p(&[1]), 2), vec![p(&[1]), p(&[2])]);
        assert_eq!(enumerate_between(&p(&[1]), &p(&[]), 2), vec![p(&[]), p(&[1])]);
        assert_eq!(enumerate_between(&p(&[1]), &p(&[1]), 2), vec![p(&[1])]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=6).map(|s| partitions(s, 10).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11]);
        assert_eq!(partitions(4, 2).len(), 3);
    }

    #[test]
    fn weights() {
        let c = Chain::new(vec![s(&[1, 0]), s(&[1])]).unwrap();
        assert_eq!(chain_weight(&c), vec![1, 0]);
        let c = Chain::new(vec![s(&[1, 0]), s(&[0])]).unwrap();
        assert_eq!(chain_weight(&c), vec![0, 1]);
        let c = Chain::new(vec![s(&[0, 0, 0]), s(&[0, 0]), s(&[0])]).unwrap();
        assert_eq!(chain_weight(&c), vec![0, 0, 0]);
    }

    #[test]
    fn gt_index_examples() {
        let c = Chain::new(vec![s(&[1, 0]), s(&[0])]).unwrap();
        let g = gt_index(&c, 1).unwrap();
        assert_eq!(g.doubled_rows(), &[vec![2, 0], vec![0]]);
        let g = gt_index(&c, 2).unwrap();
        assert_eq!(g.display_rows(), vec![vec!["3/2".to_string(), "-1/2".into()], vec!["1/2".into()]]);
        assert_eq!(gt_preimage(&g, 2), Some(c));
        // The gap bound fails at k = 1: 1 - 0 > 0 for parts (2) vs (1).
        let bad = Chain::new(vec![s(&[1, 1]), s(&[0])]).unwrap();
        assert!(matches!(gt_index(&bad, 1), Err(Error::RejectedChain(_))));
    }

    #[test]
    fn gt_pattern_counts() {
        // GT patterns of shape (2,1,0) number dim V = 8.
        assert_eq!(gt_patterns(&[4, 2, 0]).len(), 8);
        assert_eq!(gt_patterns(&[2, 0]).len(), 2);
    }

    #[test]
    fn window_chains() {
        let chains = chains_in_window(&s(&[1, 0]), 1);
        let w: Vec<Vec<i64>> = chains.iter().map(chain_weight).collect();
        assert!(w.contains(&vec![1, 0]) && w.contains(&vec![0, 1]));
        assert!(w.iter().all(|x| x[1] <= 1));
    }

    #[test]
    fn parsing() {
        assert_eq!("2,1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), p(&[]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,x".parse::<Signature>().is_err());
        assert_eq!("0,-1".parse::<Signature>().unwrap().parts(), &[0, -1]);
    }
}
