use std::fmt;

use super::field::Field;
use super::polynomial::Polynomial;
use super::weights::Weights;

/// A triple of polynomials.
///
/// Depending on context this is a derivation (values on `x, y, z`), a bivector
/// (values on `(y,z), (z,x), (x,y)`) or the coefficient vector of a form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVector(pub [Polynomial; 3]);

impl PolyVector {
    pub fn new(f1: Polynomial, f2: Polynomial, f3: Polynomial) -> Self {
        assert!(
            f1.weights() == f2.weights() && f2.weights() == f3.weights(),
            "vector components must share weights"
        );
        PolyVector([f1, f2, f3])
    }

    pub fn zero(weights: Weights, field: Field) -> Self {
        let z = Polynomial::zero(weights, field);
        PolyVector([z.clone(), z.clone(), z])
    }

    /// Unit vector `e_i` with polynomial entry `p`.
    pub fn unit(p: Polynomial, i: usize) -> Self {
        let z = p.zero_like();
        let mut v = [z.clone(), z.clone(), z];
        v[i] = p;
        PolyVector(v)
    }

    pub fn gradient(f: &Polynomial) -> Self {
        PolyVector([f.partial(0), f.partial(1), f.partial(2)])
    }

    pub fn weights(&self) -> &Weights {
        self.0[0].weights()
    }

    pub fn field(&self) -> &Field {
        self.0[0].field()
    }

    pub fn get(&self, i: usize) -> &Polynomial {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Polynomial::is_zero)
    }

    pub fn div(&self) -> Polynomial {
        &(&self.0[0].partial(0) + &self.0[1].partial(1)) + &self.0[2].partial(2)
    }

    pub fn curl(&self) -> PolyVector {
        let [f, g, h] = &self.0;
        PolyVector([
            &h.partial(1) - &g.partial(2),
            &f.partial(2) - &h.partial(0),
            &g.partial(0) - &f.partial(1),
        ])
    }

    pub fn dot(&self, other: &PolyVector) -> Polynomial {
        let mut acc = &self.0[0] * &other.0[0];
        acc = &acc + &(&self.0[1] * &other.0[1]);
        &acc + &(&self.0[2] * &other.0[2])
    }

    pub fn cross(&self, other: &PolyVector) -> PolyVector {
        let [u1, u2, u3] = &self.0;
        let [v1, v2, v3] = &other.0;
        PolyVector([
            &(u2 * v3) - &(u3 * v2),
            &(u3 * v1) - &(u1 * v3),
            &(u1 * v2) - &(u2 * v1),
        ])
    }

    /// Componentwise product with a polynomial.
    pub fn scale(&self, p: &Polynomial) -> PolyVector {
        PolyVector([p * &self.0[0], p * &self.0[1], p * &self.0[2]])
    }

    pub fn add(&self, other: &PolyVector) -> PolyVector {
        PolyVector([&self.0[0] + &other.0[0], &self.0[1] + &other.0[1], &self.0[2] + &other.0[2]])
    }

    pub fn sub(&self, other: &PolyVector) -> PolyVector {
        PolyVector([&self.0[0] - &other.0[0], &self.0[1] - &other.0[1], &self.0[2] - &other.0[2]])
    }

    pub fn neg(&self) -> PolyVector {
        PolyVector([-&self.0[0], -&self.0[1], -&self.0[2]])
    }
}

impl fmt::Display for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}
