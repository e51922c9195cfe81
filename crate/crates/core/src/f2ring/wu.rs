//! Wu classes of a 4-dimensional ring with nonsingular duality pairing.

use super::algebra::{F2Class, GradedF2Algebra, RingError};

impl GradedF2Algebra {
    /// The Wu class v_k: the unique class with `⟨v_k ∪ y, [M]⟩ = ⟨Sq^k y, [M]⟩`
    /// for every y of complementary degree, found by solving the linear
    /// system given by the pairing matrix.
    pub fn wu_class(&self, k: usize) -> Result<F2Class, RingError> {
        let top = self.top_degree();
        if top != 4 {
            return Err(RingError::WrongDimension {
                expected: 4,
                got: top,
            });
        }
        if self.presentation().fundamental.is_none() {
            return Err(RingError::MissingFundamental);
        }
        let complement = top - k;
        // Rows: ⟨b_j ∪ y_i, [M]⟩ c_j = ⟨Sq^k y_i, [M]⟩ over y_i in H^{top-k}.
        let pairing = self.pairing_matrix(k)?.transpose();
        let rhs: Vec<u8> = self
            .basis(complement)
            .iter()
            .map(|y| {
                let sq = self.sq(k, &self.monomial_class(y));
                self.pair_with_fundamental(&sq)
            })
            .collect::<Result<_, _>>()?;
        let coords = pairing
            .solve(&rhs)
            .ok_or(RingError::SingularPairing { degree: k })?;
        Ok(F2Class { degree: k, coords })
    }

    /// `(v₁, v₂)` of a closed-4-manifold ring.
    pub fn wu_classes(&self) -> Result<(F2Class, F2Class), RingError> {
        Ok((self.wu_class(1)?, self.wu_class(2)?))
    }
}
