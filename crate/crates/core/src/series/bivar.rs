use crate::exactnum::Scalar;

use super::TruncSeries;

/// Series in an outer variable `w` whose coefficients are truncated series
/// in an inner variable `z`.
#[derive(Clone, Debug, PartialEq)]
pub struct BivarTruncSeries<C> {
    rows: Vec<TruncSeries<C>>,
    order_z: usize,
}

impl<C: Scalar> BivarTruncSeries<C> {
    pub fn zero(order_w: usize, order_z: usize) -> Self {
        Self {
            rows: vec![TruncSeries::zero(order_z); order_w + 1],
            order_z,
        }
    }

    /// Embeds a series in `w` alone (constant in `z`).
    pub fn outer(f: &TruncSeries<C>, order_z: usize) -> Self {
        Self {
            rows: f
                .coeffs()
                .iter()
                .map(|c| TruncSeries::monomial(c.clone(), 0, order_z))
                .collect(),
            order_z,
        }
    }

    /// Embeds `f(c w z)`: the `w^n` coefficient is `f_n c^n z^n`.
    pub fn diagonal(f: &TruncSeries<C>, c: &C, order_w: usize, order_z: usize) -> Self {
        let mut power = C::one();
        let rows = (0..=order_w)
            .map(|n| {
                let row = TruncSeries::monomial(f.coeff(n).times(&power), n, order_z);
                power = power.times(c);
                row
            })
            .collect();
        Self { rows, order_z }
    }

    pub fn order_w(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn order_z(&self) -> usize {
        self.order_z
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order_w = self.order_w().min(rhs.order_w());
        Self {
            rows: (0..=order_w).map(|n| self.rows[n].add(&rhs.rows[n])).collect(),
            order_z: self.order_z.min(rhs.order_z),
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        Self {
            rows: self.rows.iter().map(|r| r.scale(s)).collect(),
            order_z: self.order_z,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order_w = self.order_w().min(rhs.order_w());
        let order_z = self.order_z.min(rhs.order_z);
        let mut out = Self::zero(order_w, order_z);
        for i in 0..=order_w {
            for j in 0..=(order_w - i) {
                let term = self.rows[i].mul(&rhs.rows[j]);
                out.rows[i + j] = out.rows[i + j].add(&term);
            }
        }
        out
    }

    /// `[w^u]`, an exact series in `z`.
    pub fn coeff_w(&self, u: usize) -> TruncSeries<C> {
        self.rows
            .get(u)
            .cloned()
            .unwrap_or_else(|| TruncSeries::zero(self.order_z))
    }
}
