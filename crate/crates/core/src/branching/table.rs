//! Tables of branching coefficients `mu -> c_{lam,mu}` for a fixed `lam`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::partition::{sub_signatures, Signature};
use crate::qt::QQt;

use super::coeffs::{c_hl, c_qt, ChlForm, CqtMethod};

/// Which specialization produced a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum TableParams {
    Generic,
    TEqQk { k: u32 },
    Q0,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchTable {
    pub lam: Signature,
    pub params: TableParams,
    pub entries: BTreeMap<Signature, QQt>,
}

impl BranchTable {
    /// Nonzero coefficients for every `mu <= lam` whose `x_n`-degree `|lam| - |mu|` is at most `cutoff`.
    pub fn build(lam: &Signature, cutoff: i64, params: TableParams) -> Result<BranchTable> {
        let last = lam.min_part().unwrap_or(0);
        let mut entries = BTreeMap::new();
        for mu in sub_signatures(lam, cutoff - last) {
            let c = match params {
                TableParams::Generic => c_qt(lam, &mu, CqtMethod::PsiOmega, None)?,
                TableParams::TEqQk { k } => c_qt(lam, &mu, CqtMethod::PsiOmega, None)?.at_t_eq_qk(k)?,
                TableParams::Q0 => c_hl(lam, &mu, ChlForm::Product)?,
            };
            if !c.is_zero() {
                entries.insert(mu, c);
            }
        }
        Ok(BranchTable { lam: lam.clone(), params, entries })
    }

    /// `rho(lam, mu) = |lam| - |mu|`.
    pub fn rho(&self, mu: &Signature) -> i64 {
        self.lam.size() - mu.size()
    }

    /// Entries by decreasing `|mu|`, then decreasing lexicographic order.
    pub fn sorted_entries(&self) -> Vec<(&Signature, &QQt)> {
        let mut v: Vec<_> = self.entries.iter().collect();
        v.sort_by(|a, b| b.0.size().cmp(&a.0.size()).then_with(|| b.0.cmp(a.0)));
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_table() {
        let lam = Signature::new(vec![1, 0]).unwrap();
        let t = BranchTable::build(&lam, 2, TableParams::Generic).unwrap();
        let keys: Vec<_> = t.sorted_entries().iter().map(|(m, _)| m.parts()[0]).collect();
        assert_eq!(keys, vec![1, 0, -1]);
        assert_eq!(t.rho(&Signature::new(vec![-1]).unwrap()), 2);
    }
}
