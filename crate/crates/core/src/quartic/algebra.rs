//! Arithmetic in `F[Y]/(f)` for a monic `f`: traces from Newton power sums
//! and characteristic polynomials of elements.

use crate::arith::poly::UniPoly;
use crate::field::Field;

/// Power sums `p_0, ..., p_{count-1}` of the roots of a monic polynomial.
pub fn newton_power_sums<F: Field>(f: &UniPoly<F>, count: usize) -> Vec<F> {
    let n = f.degree().expect("power sums of the zero polynomial");
    // a(i) is the coefficient of X^(n-i)
    let a = |i: usize| if i <= n { f.coeff(n - i) } else { F::zero() };
    let mut p: Vec<F> = Vec::with_capacity(count);
    for k in 0..count {
        if k == 0 {
            p.push(F::from_i64(n as i64));
            continue;
        }
        let mut acc = F::zero();
        for i in 1..k.min(n + 1) {
            acc = acc + a(i) * p[k - i].clone();
        }
        if k <= n {
            acc = acc + F::from_i64(k as i64) * a(k);
        }
        p.push(-acc);
    }
    p
}

/// Elementary symmetric functions `e_1, ..., e_n` from power sums `p_1..p_n`.
pub fn elementary_from_power_sums<F: Field>(p: &[F]) -> Vec<F> {
    let n = p.len();
    let mut e = vec![F::one()];
    for k in 1..=n {
        let mut acc = F::zero();
        for i in 1..=k {
            let term = e[k - i].clone() * p[i - 1].clone();
            acc = if i % 2 == 1 { acc + term } else { acc - term };
        }
        e.push(acc / F::from_i64(k as i64));
    }
    e.remove(0);
    e
}

/// The algebra `F[Y]/(f)` with `f` monic.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra<F: Field> {
    modulus: UniPoly<F>,
    power_sums: Vec<F>,
}

impl<F: Field> QuotientAlgebra<F> {
    pub fn new(f: &UniPoly<F>) -> Self {
        let modulus = f.monic();
        let n = modulus.degree().expect("quotient by the zero polynomial");
        let power_sums = newton_power_sums(&modulus, n);
        QuotientAlgebra { modulus, power_sums }
    }

    pub fn modulus(&self) -> &UniPoly<F> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.power_sums.len()
    }

    /// `Tr(Y^k)` for `k < deg f`.
    pub fn power_sums(&self) -> &[F] {
        &self.power_sums
    }

    pub fn reduce(&self, x: &UniPoly<F>) -> UniPoly<F> {
        x.rem(&self.modulus)
    }

    pub fn mul(&self, x: &UniPoly<F>, y: &UniPoly<F>) -> UniPoly<F> {
        self.reduce(&(x * y))
    }

    pub fn trace(&self, x: &UniPoly<F>) -> F {
        let x = self.reduce(x);
        x.coeffs()
            .iter()
            .zip(&self.power_sums)
            .fold(F::zero(), |acc, (c, p)| acc + c.clone() * p.clone())
    }

    /// Characteristic polynomial of multiplication by `x`.
    pub fn charpoly(&self, x: &UniPoly<F>) -> UniPoly<F> {
        let n = self.degree();
        let x = self.reduce(x);
        let mut traces = Vec::with_capacity(n);
        let mut power = x.clone();
        for k in 0..n {
            if k > 0 {
                power = self.mul(&power, &x);
            }
            traces.push(self.trace(&power));
        }
        let e = elementary_from_power_sums(&traces);
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[n] = F::one();
        for (k, ek) in e.into_iter().enumerate() {
            let k = k + 1;
            coeffs[n - k] = if k % 2 == 1 { -ek } else { ek };
        }
        UniPoly::new(coeffs)
    }
}

/// The trace-zero element `mY³ + nY² + pY + q` of `F[Y]/(f)` for a reduced
/// quartic `f = Y⁴ + aY² + bY + c`, with `q = (3bm + 2an)/4`.
pub fn reduced_element<F: Field>(f: &UniPoly<F>, m: &F, n: &F, p: &F) -> UniPoly<F> {
    let a = f.coeff(2);
    let b = f.coeff(1);
    let q = (F::from_i64(3) * b * m.clone() + F::from_i64(2) * a * n.clone()) / F::from_i64(4);
    UniPoly::new(vec![q, p.clone(), n.clone(), m.clone()])
}

/// Minimal-polynomial candidate `Tsc(f; m, n, p)`: the characteristic
/// polynomial of the trace-zero element above.
pub fn tschirnhaus_poly<F: Field>(f: &UniPoly<F>, m: &F, n: &F, p: &F) -> UniPoly<F> {
    let alg = QuotientAlgebra::new(f);
    alg.charpoly(&reduced_element(f, m, n, p))
}
