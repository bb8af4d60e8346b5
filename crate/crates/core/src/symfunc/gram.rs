use super::GradedSector;
use crate::linalg::Matrix;
use crate::partitions::b_lambda;
use crate::ring::Rational;
use crate::{Error, Result};

/// Gram matrix of the `P_λ` basis of a sector: diagonal with entries
/// `⟨P_λ, P_λ⟩ = 1/b_λ(t)`. At `t = 0` this is the identity (orthonormal
/// Schur basis).
pub fn gram_matrix(sector: &GradedSector, t: &Rational) -> Result<Matrix<Rational>> {
    if t.is_one() {
        return Err(Error::Domain(
            "the Hall–Littlewood scalar product needs t != 1".into(),
        ));
    }
    let entries = sector
        .basis()
        .iter()
        .map(|l| b_lambda(l, t).recip())
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::diagonal(entries))
}

/// Adjoint of `op: src -> dst` with respect to the Gram pairings, as a map
/// `dst -> src`: `G_src^{-1} · opᵀ · G_dst`.
pub fn adjoint_op(
    op: &Matrix<Rational>,
    src: &GradedSector,
    dst: &GradedSector,
    t: &Rational,
) -> Result<Matrix<Rational>> {
    if op.rows() != dst.dim() || op.cols() != src.dim() {
        return Err(Error::Domain(format!(
            "operator is {}x{}, sectors need {}x{}",
            op.rows(),
            op.cols(),
            dst.dim(),
            src.dim()
        )));
    }
    let g_src = gram_matrix(src, t)?;
    let g_dst = gram_matrix(dst, t)?;
    let g_src_inv = Matrix::diagonal(
        (0..src.dim())
            .map(|i| g_src.get(i, i).recip())
            .collect::<Result<_>>()?,
    );
    Ok(g_src_inv.mul(&op.transpose()).mul(&g_dst))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;
    use crate::symfunc::{pieri_h_matrix, pieri_q_matrix};

    #[test]
    fn gram_examples() {
        let t = Rational::new(1, 3);
        assert_eq!(
            gram_matrix(&GradedSector::new(3, 0), &t).unwrap(),
            Matrix::identity(1)
        );
        assert_eq!(
            gram_matrix(&GradedSector::new(3, 1), &t).unwrap(),
            Matrix::diagonal(vec![Rational::new(3, 2)])
        );
        assert_eq!(
            gram_matrix(&GradedSector::new(2, 2), &Rational::zero()).unwrap(),
            Matrix::identity(2)
        );
        assert!(gram_matrix(&GradedSector::new(2, 2), &Rational::one()).is_err());
    }

    #[test]
    fn one_column_adjoint_is_inverse_shift() {
        // Λ_1: h_1 shifts (1^n) to (1^{n+1}); its adjoint shifts back.
        for d in 0..4 {
            let src = GradedSector::new(1, d);
            let dst = GradedSector::new(1, d + 1);
            let h = pieri_h_matrix::<Rational>(src.basis(), dst.basis(), 1, 1).unwrap();
            let adj = adjoint_op(&h, &src, &dst, &Rational::zero()).unwrap();
            assert_eq!(adj.mul(&h), Matrix::identity(1));
        }
    }

    #[test]
    fn h2_perp_on_two_one() {
        let src = GradedSector::new(2, 1);
        let dst = GradedSector::new(2, 3);
        let h2 = pieri_h_matrix::<Rational>(src.basis(), dst.basis(), 2, 2).unwrap();
        let adj = adjoint_op(&h2, &src, &dst, &Rational::zero()).unwrap();
        let col = dst.index_of(&Partition::of(&[2, 1])).unwrap();
        assert_eq!(adj.get(0, col), Rational::one());
        assert_eq!(adj.cols(), dst.dim());
    }

    #[test]
    fn adjoint_of_identity() {
        let s = GradedSector::new(3, 3);
        let id = Matrix::identity(s.dim());
        assert_eq!(adjoint_op(&id, &s, &s, &Rational::new(1, 2)).unwrap(), id);
    }

    #[test]
    fn q_adjointness_pairing() {
        let t = Rational::new(1, 2);
        let src = GradedSector::new(3, 2);
        let dst = GradedSector::new(3, 4);
        let q2 = pieri_q_matrix(src.basis(), dst.basis(), 2, &t, 3).unwrap();
        let adj = adjoint_op(&q2, &src, &dst, &t).unwrap();
        let g_src = gram_matrix(&src, &t).unwrap();
        let g_dst = gram_matrix(&dst, &t).unwrap();
        // ⟨q f, g⟩ = ⟨f, q^⊥ g⟩ for all basis pairs.
        assert_eq!(q2.transpose().mul(&g_dst), g_src.mul(&adj));
    }
}
