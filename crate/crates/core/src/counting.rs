//! `N(m, g)` tables, their completion by the multiplicity recurrence
//! `N(m, g) = N(m-1, g-1) + N(m-1, g-2)` (valid for `2g < 3m`), and the
//! derived totals `N(g)` and `Θ(Γ)`.

use std::fmt;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::explorer::{explore, plan_roots, ExplorationTask, Target};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Explored,
    Recurrence,
    StructuralZero,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Explored => "explored",
            Provenance::Recurrence => "recurrence",
            Provenance::StructuralZero => "structural_zero",
        })
    }
}

/// One known cell of a [`CountMatrix`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub m: u32,
    pub g: u32,
    pub count: u128,
    pub provenance: Provenance,
}

/// Counts indexed by multiplicity `1..=max_multiplicity` and genus
/// `0..=max_genus`. Cells not computed yet are absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountMatrix {
    max_multiplicity: u32,
    max_genus: u32,
    cells: Vec<Option<(u128, Provenance)>>,
}

impl CountMatrix {
    pub fn new(max_multiplicity: u32, max_genus: u32) -> Self {
        CountMatrix {
            max_multiplicity,
            max_genus,
            cells: vec![None; max_multiplicity as usize * (max_genus as usize + 1)],
        }
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.max_multiplicity
    }

    pub fn max_genus(&self) -> u32 {
        self.max_genus
    }

    fn index(&self, m: u32, g: u32) -> Option<usize> {
        (1..=self.max_multiplicity).contains(&m).then_some(())?;
        (g <= self.max_genus).then(|| (m as usize - 1) * (self.max_genus as usize + 1) + g as usize)
    }

    pub fn set(&mut self, m: u32, g: u32, count: u128, provenance: Provenance) {
        let i = self.index(m, g).unwrap_or_else(|| panic!("cell ({m}, {g}) outside the matrix"));
        self.cells[i] = Some((count, provenance));
    }

    pub fn get(&self, m: u32, g: u32) -> Option<u128> {
        self.cell(m, g).map(|(c, _)| c)
    }

    pub fn provenance(&self, m: u32, g: u32) -> Option<Provenance> {
        self.cell(m, g).map(|(_, p)| p)
    }

    fn cell(&self, m: u32, g: u32) -> Option<(u128, Provenance)> {
        self.index(m, g).and_then(|i| self.cells[i])
    }

    /// Structural cells: `N` alone has multiplicity 1, and `N(m, g) = 0` for
    /// `m > g + 1`.
    fn structural(m: u32, g: u32) -> Option<(u128, Provenance)> {
        if m == 1 {
            Some(if g == 0 { (1, Provenance::Explored) } else { (0, Provenance::StructuralZero) })
        } else if m > g + 1 {
            Some((0, Provenance::StructuralZero))
        } else {
            None
        }
    }

    /// Fills the multiplicity 1 row and every cell with `m > g + 1`.
    pub fn fill_structural(&mut self) {
        for m in 1..=self.max_multiplicity {
            for g in 0..=self.max_genus {
                if let Some((c, p)) = Self::structural(m, g) {
                    self.set(m, g, c, p);
                }
            }
        }
    }

    /// The recurrence value for one cell, refused outside `2g < 3m`.
    pub fn kaplan_cell(&self, m: u32, g: u32) -> Result<u128> {
        if m < 2 || 2 * g as u64 >= 3 * m as u64 {
            return Err(Error::GuardViolation { m, g });
        }
        let dep = |gg: Option<u32>| match gg {
            None => Ok(0),
            Some(gg) => self.get(m - 1, gg).ok_or_else(|| {
                Error::InvalidParameter(format!("cell ({}, {gg}) needed for ({m}, {g}) is unknown", m - 1))
            }),
        };
        Ok(dep(g.checked_sub(1))? + dep(g.checked_sub(2))?)
    }

    /// Completes the matrix for every multiplicity above `ceil(2 gamma / 3)`
    /// and genus up to `gamma`, in increasing multiplicity.
    pub fn kaplan_extend(&self, gamma: u32) -> Result<CountMatrix> {
        if gamma > self.max_genus || gamma + 1 > self.max_multiplicity {
            return Err(Error::InvalidParameter(format!("matrix too small for genus {gamma}")));
        }
        let bound = (2 * gamma).div_ceil(3);
        let mut out = self.clone();
        for m in (bound + 1).max(2)..=gamma + 1 {
            for g in 0..=gamma {
                if let Some((c, p)) = Self::structural(m, g) {
                    out.set(m, g, c, p);
                } else {
                    let v = out.kaplan_cell(m, g)?;
                    out.set(m, g, v, Provenance::Recurrence);
                }
            }
        }
        Ok(out)
    }

    /// `N(g)` for `g = 0..=max_genus`; every cell must be known.
    pub fn total_by_genus(&self) -> Result<Vec<u128>> {
        (0..=self.max_genus)
            .map(|g| {
                (1..=self.max_multiplicity)
                    .map(|m| {
                        self.get(m, g)
                            .ok_or_else(|| Error::InvalidParameter(format!("cell ({m}, {g}) is unknown")))
                    })
                    .sum()
            })
            .collect()
    }

    /// `Θ(gamma) = N(0) + ... + N(gamma)`.
    pub fn theta(&self, gamma: u32) -> Result<u128> {
        if gamma > self.max_genus {
            return Err(Error::InvalidParameter(format!("genus {gamma} beyond the matrix")));
        }
        Ok(self.total_by_genus()?[..=gamma as usize].iter().sum())
    }

    /// Known cells sorted by `(m, g)`.
    pub fn rows(&self) -> Vec<CountRow> {
        let mut out = Vec::new();
        for m in 1..=self.max_multiplicity {
            for g in 0..=self.max_genus {
                if let Some((count, provenance)) = self.cell(m, g) {
                    out.push(CountRow { m, g, count, provenance });
                }
            }
        }
        out
    }

    /// CSV with header `m,g,count,provenance`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "m,g,count,provenance")?;
        for r in self.rows() {
            writeln!(w, "{},{},{},{}", r.m, r.g, r.count, r.provenance)?;
        }
        Ok(())
    }
}

/// `N(m, g)` for every `m` and `g <= gamma`, by exploring all of `T_2`, ...,
/// `T_{gamma+1}`. With `kaplan`, only `m <= ceil(2 gamma / 3)` is explored.
pub fn count_all(gamma: u32, workers: usize, kaplan: bool) -> Result<CountMatrix> {
    let bound = (2 * gamma).div_ceil(3);
    let roots = plan_roots(gamma, Target::CountAll)
        .into_iter()
        .filter(|r| !kaplan || r.multiplicity() <= bound)
        .collect();
    let task = ExplorationTask::new(roots, gamma, Target::CountAll).workers(workers);
    let mut mat = explore(&task)?.counts;
    mat.fill_structural();
    if kaplan {
        mat = mat.kaplan_extend(gamma)?;
    }
    Ok(mat)
}

/// `N(m, g)` for one multiplicity `m >= 1` and `g <= gamma`.
pub fn count_multiplicity(gamma: u32, m: u32, workers: usize) -> Result<CountMatrix> {
    if m == 0 || m > gamma + 1 {
        return Err(Error::InvalidParameter(format!("multiplicity {m} outside 1..={}", gamma + 1)));
    }
    let mut mat = if m == 1 {
        CountMatrix::new(gamma + 1, gamma)
    } else {
        let task = ExplorationTask::new(vec![crate::Semigroup::superficial(m)?], gamma, Target::CountAll).workers(workers);
        explore(&task)?.counts
    };
    if m == 1 {
        for g in 0..=gamma {
            let (c, p) = CountMatrix::structural(1, g).expect("structural row");
            mat.set(1, g, c, p);
        }
    }
    Ok(mat)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_totals() {
        let mat = count_all(10, 1, false).unwrap();
        let n = mat.total_by_genus().unwrap();
        assert_eq!(n, vec![1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204]);
        assert_eq!(mat.theta(2).unwrap(), 4);
        assert_eq!(mat.theta(0).unwrap(), 1);
        for g in 0..=10 {
            assert_eq!(mat.get(g + 1, g), Some(1));
        }
    }

    #[test]
    fn hybrid_small() {
        for gamma in 1..=12 {
            let full = count_all(gamma, 1, false).unwrap();
            let hybrid = count_all(gamma, 1, true).unwrap();
            assert_eq!(full.total_by_genus().unwrap(), hybrid.total_by_genus().unwrap(), "gamma {gamma}");
        }
    }

    #[test]
    fn guard_refuses() {
        let mat = count_all(6, 1, false).unwrap();
        assert_eq!(mat.kaplan_cell(4, 6), Err(Error::GuardViolation { m: 4, g: 6 }));
        assert_eq!(mat.kaplan_cell(1, 0), Err(Error::GuardViolation { m: 1, g: 0 }));
        assert!(mat.kaplan_cell(5, 6).is_ok());
    }

    #[test]
    fn csv_format() {
        let mat = count_all(2, 1, false).unwrap();
        let mut buf = Vec::new();
        mat.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("m,g,count,provenance\n1,0,1,explored\n1,1,0,structural_zero\n"));
        assert_eq!(text.lines().count(), 1 + 3 * 3);
    }
}
