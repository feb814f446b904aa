//! Brute-force subgroup counts in finite abelian p-groups.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::branching::sk;
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partition::Partition;
use crate::qt::T;

/// Default bound on the group order.
pub const DEFAULT_MAX_ORDER: u64 = 243;

type Bits = Vec<u64>;

fn bit(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn subset(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn checked_order(lam: &Partition, p: u64, max_order: u64) -> Result<usize> {
    if p < 2 || (2..p).any(|d| p.is_multiple_of(d)) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    let order = (p as u128).checked_pow(lam.size() as u32).unwrap_or(u128::MAX);
    if order > max_order as u128 || order > u16::MAX as u128 {
        return Err(Error::GroupTooLarge { order: order.min(u64::MAX as u128) as u64, bound: max_order });
    }
    Ok(order as usize)
}

/// `Z/p^{lam_1} + Z/p^{lam_2} + ...` with elements numbered in mixed radix.
#[derive(Debug)]
pub struct AbelianPGroup {
    p: u64,
    lam: Partition,
    order: usize,
    add: Vec<u16>,
    times_p: Vec<u16>,
}

impl AbelianPGroup {
    pub fn new(lam: &Partition, p: u64, max_order: u64) -> Result<Self> {
        let order = checked_order(lam, p, max_order)?;
        let moduli: Vec<usize> = lam.parts().iter().map(|&e| (p as usize).pow(e as u32)).collect();
        let decode = |mut x: usize| -> Vec<usize> {
            moduli
                .iter()
                .map(|&m| {
                    let d = x % m;
                    x /= m;
                    d
                })
                .collect()
        };
        let encode = |v: &[usize]| -> usize { v.iter().zip(&moduli).rev().fold(0, |acc, (d, m)| acc * m + d) };
        let digits: Vec<Vec<usize>> = (0..order).map(decode).collect();
        let mut add = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                let s: Vec<usize> = (0..moduli.len()).map(|i| (digits[a][i] + digits[b][i]) % moduli[i]).collect();
                add[a * order + b] = encode(&s) as u16;
            }
        }
        let times_p = (0..order)
            .map(|a| {
                let s: Vec<usize> = (0..moduli.len()).map(|i| digits[a][i] * p as usize % moduli[i]).collect();
                encode(&s) as u16
            })
            .collect();
        Ok(AbelianPGroup { p, lam: lam.clone(), order, add, times_p })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn lam(&self) -> &Partition {
        &self.lam
    }

    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    fn words(&self) -> usize {
        self.order.div_ceil(64)
    }

    fn members(&self, h: &Bits) -> Vec<usize> {
        (0..self.order).filter(|&i| bit(h, i)).collect()
    }

    /// `H + <g>`.
    fn extend(&self, h: &Bits, g: usize) -> Bits {
        let hs = self.members(h);
        let mut out = h.clone();
        let mut x = g;
        while !bit(h, x) {
            for &e in &hs {
                set(&mut out, self.add(e, x));
            }
            x = self.add(x, g);
        }
        out
    }

    /// Every subgroup, each once, ordered by size and then by element set.
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let mut zero = vec![0u64; self.words()];
        set(&mut zero, 0);
        let mut seen: HashSet<Bits> = HashSet::from([zero.clone()]);
        let mut frontier = vec![zero];
        while let Some(h) = frontier.pop() {
            let mut covered = h.clone();
            for g in 0..self.order {
                if bit(&covered, g) {
                    continue;
                }
                for e in self.members(&h) {
                    set(&mut covered, self.add(e, g));
                }
                let k = self.extend(&h, g);
                if seen.insert(k.clone()) {
                    frontier.push(k);
                }
            }
        }
        let mut out: Vec<Subgroup> = seen.into_iter().map(|bits| Subgroup::new(self, bits)).collect();
        out.sort_by(|a, b| a.size.cmp(&b.size).then_with(|| a.bits.cmp(&b.bits)));
        out
    }

    /// The type `mu` of `H`, from `mu'_j = log_p |p^{j-1} H / p^j H|`.
    fn type_of(&self, h: &Bits) -> Partition {
        let mut cur = self.members(h);
        let mut sizes = vec![cur.len()];
        while cur.len() > 1 {
            let mut next: Vec<usize> = cur.iter().map(|&x| self.times_p[x] as usize).collect();
            next.sort_unstable();
            next.dedup();
            cur = next;
            sizes.push(cur.len());
        }
        let conj: Vec<i64> = sizes
            .windows(2)
            .map(|w| {
                let mut r = w[0] / w[1];
                let mut e = 0;
                while r > 1 {
                    r /= self.p as usize;
                    e += 1;
                }
                e
            })
            .collect();
        Partition::new(conj).expect("layer sizes decrease").conjugate()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    bits: Bits,
    size: usize,
    kind: Partition,
}

impl Subgroup {
    fn new(g: &AbelianPGroup, bits: Bits) -> Self {
        let size = bits.iter().map(|w| w.count_ones() as usize).sum();
        let kind = g.type_of(&bits);
        Subgroup { bits, size, kind }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// The type `mu` of the subgroup.
    pub fn kind(&self) -> &Partition {
        &self.kind
    }

    pub fn contains(&self, other: &Subgroup) -> bool {
        subset(&other.bits, &self.bits)
    }
}

static LATTICES: Memo<(Partition, u64), Arc<Vec<Subgroup>>> = Memo::new();

/// All subgroups of the group of type `lam`.
pub fn enumerate_subgroups(lam: &Partition, p: u64, max_order: u64) -> Result<Arc<Vec<Subgroup>>> {
    checked_order(lam, p, max_order)?;
    LATTICES.get_or_try((lam.clone(), p), || Ok(Arc::new(AbelianPGroup::new(lam, p, max_order)?.subgroups())))
}

/// `alpha_lam(mu; p)`, the number of subgroups of type `mu`.
pub fn alpha(lam: &Partition, mu: &Partition, p: u64, max_order: u64) -> Result<u64> {
    Ok(enumerate_subgroups(lam, p, max_order)?.iter().filter(|h| h.kind() == mu).count() as u64)
}

/// Subgroup counts by type.
pub fn type_counts(lam: &Partition, p: u64, max_order: u64) -> Result<HashMap<Partition, u64>> {
    let mut out = HashMap::new();
    for h in enumerate_subgroups(lam, p, max_order)?.iter() {
        *out.entry(h.kind().clone()).or_insert(0) += 1;
    }
    Ok(out)
}

/// Number of flags `H_1 >= H_2 >= ...` with `H_i` of type `types[i]`.
pub fn count_chains(lam: &Partition, types: &[Partition], p: u64, max_order: u64) -> Result<u64> {
    let subs = enumerate_subgroups(lam, p, max_order)?;
    let Some(first) = types.first() else {
        return Ok(1);
    };
    let mut level: Vec<(&Subgroup, u64)> = subs.iter().filter(|h| h.kind() == first).map(|h| (h, 1)).collect();
    for ty in &types[1..] {
        level = subs
            .iter()
            .filter(|k| k.kind() == ty)
            .map(|k| (k, level.iter().filter(|(h, _)| h.contains(k)).map(|(_, c)| c).sum()))
            .collect();
    }
    Ok(level.iter().map(|(_, c)| c).sum())
}

fn p_power(p: u64, e: i64) -> BigRational {
    let b = BigRational::from_integer(BigInt::from(p));
    if e >= 0 {
        num_traits::pow(b, e as usize)
    } else {
        num_traits::pow(b.recip(), (-e) as usize)
    }
}

fn sk_inverse_p(lam: &Partition, mu: &Partition, p: u64) -> Result<BigRational> {
    sk(lam, mu, T).eval(&BigRational::zero(), &BigRational::new(BigInt::one(), BigInt::from(p)))
}

/// `p^{n(lam) - n(mu)} sk_{lam/mu}(1/p)`, the closed form for `alpha_lam(mu; p)`.
pub fn predicted_alpha(lam: &Partition, mu: &Partition, p: u64) -> Result<BigRational> {
    predicted_chains(lam, std::slice::from_ref(mu), p)
}

/// `p^{n(lam) - n(last)} prod sk(1/p)` over consecutive types, the closed form for [`count_chains`].
pub fn predicted_chains(lam: &Partition, types: &[Partition], p: u64) -> Result<BigRational> {
    let mut acc = BigRational::one();
    let mut top = lam;
    for ty in types {
        acc *= sk_inverse_p(top, ty, p)?;
        top = ty;
    }
    Ok(acc * p_power(p, lam.n_stat() - top.n_stat()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lattice_sizes() {
        assert_eq!(enumerate_subgroups(&p(&[1, 1]), 3, 243).unwrap().len(), 6);
        assert_eq!(enumerate_subgroups(&p(&[2]), 3, 243).unwrap().len(), 3);
        assert_eq!(enumerate_subgroups(&p(&[]), 3, 243).unwrap().len(), 1);
    }

    #[test]
    fn types() {
        let subs = enumerate_subgroups(&p(&[1, 1]), 3, 243).unwrap();
        assert_eq!(subs[0].kind(), &p(&[]));
        assert_eq!(subs[1].kind(), &p(&[1]));
        assert_eq!(subs.last().unwrap().kind(), &p(&[1, 1]));
    }

    #[test]
    fn counts() {
        assert_eq!(alpha(&p(&[1, 1]), &p(&[1]), 3, 243).unwrap(), 4);
        assert_eq!(alpha(&p(&[2]), &p(&[1]), 3, 243).unwrap(), 1);
        assert_eq!(alpha(&p(&[2, 1]), &p(&[]), 3, 243).unwrap(), 1);
        assert_eq!(count_chains(&p(&[1, 1]), &[p(&[1])], 3, 243).unwrap(), 4);
        assert_eq!(count_chains(&p(&[1, 1]), &[p(&[1]), p(&[])], 3, 243).unwrap(), 4);
        assert_eq!(count_chains(&p(&[1, 1]), &[], 3, 243).unwrap(), 1);
    }

    #[test]
    fn predictions() {
        let four = BigRational::from_integer(4.into());
        assert_eq!(predicted_alpha(&p(&[1, 1]), &p(&[1]), 3).unwrap(), four);
        assert_eq!(predicted_chains(&p(&[1, 1]), &[p(&[1]), p(&[])], 3).unwrap(), four);
        assert!(predicted_chains(&p(&[2]), &[], 5).unwrap().is_one());
    }

    #[test]
    fn size_bound() {
        assert!(matches!(
            AbelianPGroup::new(&p(&[3, 3]), 3, 243),
            Err(Error::GroupTooLarge { order: 729, bound: 243 })
        ));
        assert!(AbelianPGroup::new(&p(&[1]), 4, 243).is_err());
    }
}
