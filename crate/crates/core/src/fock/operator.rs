use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::linalg::Matrix;
use crate::partitions::{partitions_in_box, OccupationVector, Partition};
use crate::ring::{Coefficient, Rational, Ring};
use crate::{Error, Result};

/// The Fock space of sites `0..=M` with particle-number sectors `0..=cap`.
///
/// Sector `N` has basis the occupation vectors with `N` particles, listed in
/// the order of their diagrams (`n_j` rows of length `j`).
pub struct FockSpace {
    sites: usize,
    cap: usize,
    sectors: Vec<Vec<Partition>>,
    index: Vec<HashMap<Partition, usize>>,
}

impl FockSpace {
    /// `max_site` is `M`; sectors above `cap` are not represented.
    pub fn new(max_site: usize, cap: usize) -> Arc<Self> {
        let sectors: Vec<Vec<Partition>> =
            (0..=cap).map(|n| partitions_in_box(n, max_site)).collect();
        let index = sectors
            .iter()
            .map(|s| s.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect())
            .collect();
        Arc::new(FockSpace {
            sites: max_site,
            cap,
            sectors,
            index,
        })
    }

    pub fn max_site(&self) -> usize {
        self.sites
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Basis diagrams of sector `n`.
    pub fn sector(&self, n: usize) -> &[Partition] {
        &self.sectors[n]
    }

    pub fn dim(&self, n: usize) -> usize {
        self.sectors[n].len()
    }

    pub fn index_of(&self, n: usize, lambda: &Partition) -> Option<usize> {
        self.index.get(n)?.get(lambda).copied()
    }

    pub fn occupation(&self, n: usize, i: usize) -> OccupationVector {
        OccupationVector::from_partition(&self.sectors[n][i], self.sites, n)
            .expect("sector basis fits the box")
    }

    /// Dimension of sector `n`: zero below the vacuum, unknown above the cap.
    fn target_dim(&self, n: i64) -> Option<usize> {
        if n < 0 {
            Some(0)
        } else if n as usize > self.cap {
            None
        } else {
            Some(self.dim(n as usize))
        }
    }
}

impl fmt::Debug for FockSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FockSpace(M={}, cap={})", self.sites, self.cap)
    }
}

/// First disagreement between two operator identities.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Mismatch {
    pub relation: String,
    pub sector: usize,
    pub from: OccupationVector,
    pub to: Option<OccupationVector>,
    pub lhs: String,
    pub rhs: String,
}

/// An operator that changes the particle number by a fixed `shift`, stored
/// as one matrix per source sector. A block is `None` when its target lies
/// above the cap.
#[derive(Clone)]
pub struct GradedOp<R> {
    space: Arc<FockSpace>,
    shift: i32,
    blocks: Vec<Option<Matrix<R>>>,
}

impl<R: Ring> GradedOp<R> {
    pub fn zero(space: &Arc<FockSpace>, shift: i32) -> Self {
        let blocks = (0..=space.cap)
            .map(|n| {
                space
                    .target_dim(n as i64 + shift as i64)
                    .map(|rows| Matrix::zeros(rows, space.dim(n)))
            })
            .collect();
        GradedOp {
            space: space.clone(),
            shift,
            blocks,
        }
    }

    pub fn identity(space: &Arc<FockSpace>) -> Self {
        Self::diagonal(space, |_| R::one())
    }

    /// Diagonal operator with entry `f(state)`.
    pub fn diagonal(space: &Arc<FockSpace>, f: impl Fn(&OccupationVector) -> R) -> Self {
        Self::from_action(space, 0, |occ| vec![(occ.clone(), f(occ))])
    }

    /// Operator whose value on each basis state is a combination of basis
    /// states with `shift` more particles. Images outside the represented
    /// sectors are dropped, and the corresponding blocks left undefined.
    pub fn from_action(
        space: &Arc<FockSpace>,
        shift: i32,
        action: impl Fn(&OccupationVector) -> Vec<(OccupationVector, R)>,
    ) -> Self {
        let mut op = Self::zero(space, shift);
        for n in 0..=space.cap {
            let Some(block) = op.blocks[n].as_mut() else {
                continue;
            };
            let target = (n as i64 + shift as i64) as usize;
            for j in 0..space.dim(n) {
                for (occ, c) in action(&space.occupation(n, j)) {
                    debug_assert_eq!(occ.particles(), target);
                    let i = space
                        .index_of(target, &occ.to_partition())
                        .expect("image state lies in the space");
                    block.add_at(i, j, c);
                }
            }
        }
        op
    }

    /// Operator with the given block for each source sector; `None` leaves
    /// the block undefined.
    pub fn from_blocks(
        space: &Arc<FockSpace>,
        shift: i32,
        block: impl Fn(usize) -> Option<Result<Matrix<R>>>,
    ) -> Result<Self> {
        let blocks = (0..=space.cap)
            .map(|n| block(n).transpose())
            .collect::<Result<_>>()?;
        Ok(GradedOp {
            space: space.clone(),
            shift,
            blocks,
        })
    }

    pub fn space(&self) -> &Arc<FockSpace> {
        &self.space
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    /// Block from sector `n` to sector `n + shift`.
    pub fn block(&self, n: usize) -> Option<&Matrix<R>> {
        self.blocks.get(n)?.as_ref()
    }

    fn check_space(&self, rhs: &Self) {
        assert!(
            Arc::ptr_eq(&self.space, &rhs.space)
                || (self.space.sites == rhs.space.sites && self.space.cap == rhs.space.cap),
            "operators on different Fock spaces"
        );
    }

    /// Composition `self ∘ rhs`.
    pub fn compose(&self, rhs: &Self) -> Self {
        self.check_space(rhs);
        let space = &self.space;
        let shift = self.shift + rhs.shift;
        let blocks = (0..=space.cap)
            .map(|n| {
                let rows = space.target_dim(n as i64 + shift as i64)?;
                let inner = rhs.blocks[n].as_ref()?;
                let mid = n as i64 + rhs.shift as i64;
                if mid < 0 {
                    return Some(Matrix::zeros(rows, space.dim(n)));
                }
                Some(self.blocks.get(mid as usize)?.as_ref()?.mul(inner))
            })
            .collect();
        GradedOp {
            space: space.clone(),
            shift,
            blocks,
        }
    }

    /// Leaves the blocks with source sector above `max_n` undefined, so
    /// products with this operator on the right skip those sectors.
    pub fn restrict_sources(&self, max_n: usize) -> Self {
        let mut out = self.clone();
        for b in out.blocks.iter_mut().skip(max_n + 1) {
            *b = None;
        }
        out
    }

    /// `self + rhs`, or `self - rhs` when `subtract` is set.
    fn combine(&self, rhs: &Self, subtract: bool) -> Self {
        self.check_space(rhs);
        if self.shift != rhs.shift {
            // A genuinely zero term may carry any shift.
            if Coefficient::is_zero(rhs) {
                return self.clone();
            }
            if Coefficient::is_zero(self) {
                return if subtract { rhs.neg_ref() } else { rhs.clone() };
            }
            panic!(
                "adding operators with particle shifts {} and {}",
                self.shift, rhs.shift
            );
        }
        let blocks = self
            .blocks
            .iter()
            .zip(&rhs.blocks)
            .map(|(a, b)| {
                let (a, b) = (a.as_ref()?, b.as_ref()?);
                Some(if subtract { a.sub(b) } else { a.add(b) })
            })
            .collect();
        GradedOp {
            space: self.space.clone(),
            shift: self.shift,
            blocks,
        }
    }

    pub fn scale_ring(&self, by: &R) -> Self {
        self.map_blocks(self.shift, |m| m.scale_ring(by))
    }

    fn map_blocks(&self, shift: i32, f: impl Fn(&Matrix<R>) -> Matrix<R>) -> Self {
        GradedOp {
            space: self.space.clone(),
            shift,
            blocks: self.blocks.iter().map(|b| b.as_ref().map(&f)).collect(),
        }
    }

    /// Blockwise transpose: the adjoint for the orthonormal occupation basis.
    pub fn transpose(&self) -> Self {
        let space = &self.space;
        let shift = -self.shift;
        let blocks = (0..=space.cap)
            .map(|n| {
                let rows = space.target_dim(n as i64 + shift as i64)?;
                let src = n as i64 - self.shift as i64;
                if src < 0 {
                    return Some(Matrix::zeros(rows, space.dim(n)));
                }
                Some(self.blocks.get(src as usize)?.as_ref()?.transpose())
            })
            .collect();
        GradedOp {
            space: space.clone(),
            shift,
            blocks,
        }
    }

    /// Applies `f` to every matrix entry.
    pub fn map_entries<S: Ring>(&self, f: impl Fn(&R) -> S) -> GradedOp<S> {
        GradedOp {
            space: self.space.clone(),
            shift: self.shift,
            blocks: self
                .blocks
                .iter()
                .map(|b| b.as_ref().map(|m| m.map(&f)))
                .collect(),
        }
    }

    /// Compares the blocks with source sector `<= max_n`.
    ///
    /// Operators that are zero on a sector may carry any shift, so a shift
    /// mismatch only counts where either side is nonzero.
    pub fn first_mismatch(
        &self,
        other: &Self,
        max_n: usize,
        relation: &str,
    ) -> Result<Option<Mismatch>> {
        self.check_space(other);
        let space = &self.space;
        if max_n > space.cap {
            return Err(Error::Resource(format!(
                "sector {max_n} is above the cap {}",
                space.cap
            )));
        }
        for n in 0..=max_n {
            let a = self.defined_block(n)?;
            let b = other.defined_block(n)?;
            let witness = |i: Option<(usize, i32)>, lhs: String, rhs: String| Mismatch {
                relation: relation.to_string(),
                sector: n,
                from: space.occupation(n, 0),
                to: i.map(|(row, shift)| space.occupation((n as i64 + shift as i64) as usize, row)),
                lhs,
                rhs,
            };
            if self.shift != other.shift {
                if a.is_zero() && b.is_zero() {
                    continue;
                }
                return Ok(Some(witness(
                    None,
                    format!("shift {}", self.shift),
                    format!("shift {}", other.shift),
                )));
            }
            if let Some((r, c, x, y)) = a.first_difference(b) {
                let mut w = witness(Some((r, self.shift)), x.to_string(), y.to_string());
                w.from = space.occupation(n, c);
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    fn defined_block(&self, n: usize) -> Result<&Matrix<R>> {
        self.blocks[n].as_ref().ok_or_else(|| {
            Error::Resource(format!(
                "sector {n} needs a larger cap than {}",
                self.space.cap
            ))
        })
    }
}

impl<R: Ring> PartialEq for GradedOp<R> {
    fn eq(&self, other: &Self) -> bool {
        self.space.sites == other.space.sites
            && self.space.cap == other.space.cap
            && self.shift == other.shift
            && self.blocks == other.blocks
    }
}

impl<R: Ring> fmt::Debug for GradedOp<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedOp(shift {}, {:?})", self.shift, self.space)?;
        for (n, b) in self.blocks.iter().enumerate() {
            if let Some(m) = b {
                if !m.is_zero() {
                    write!(f, "\n  sector {n}: {m:?}")?;
                }
            }
        }
        Ok(())
    }
}

impl<R: Ring> Coefficient for GradedOp<R> {
    /// Zero on every sector, with no undefined blocks.
    fn is_zero(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b.as_ref().is_some_and(Matrix::is_zero))
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.combine(rhs, false)
    }

    fn neg_ref(&self) -> Self {
        self.map_blocks(self.shift, Matrix::neg)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.compose(rhs)
    }

    fn scale(&self, by: &Rational) -> Self {
        self.map_blocks(self.shift, |m| m.scale(by))
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.combine(rhs, true)
    }
}
