//! Exact real-root isolation for integer polynomials.
//!
//! Roots of a characteristic polynomial are recovered with their exact
//! multiplicities: Yun's square-free factorization splits the polynomial into
//! factors with simple roots, Sturm sequences isolate each real root in a
//! dyadic interval, and bisection at dyadic points narrows it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Polynomial with rational coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Poly(Vec<BigRational>);

impl Poly {
    pub fn from_descending(coeffs: &[BigInt]) -> Self {
        Poly::new(coeffs.iter().rev().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("nonzero polynomial")
    }

    fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    fn monic(&self) -> Poly {
        let lead = self.lead().clone();
        Poly(self.0.iter().map(|c| c / &lead).collect())
    }

    fn sub(&self, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        let zero = BigRational::zero();
        Poly::new(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&zero) - other.0.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.0.clone();
        let dd = d.degree();
        if self.is_zero() || self.degree() < dd {
            return (Poly(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / d.lead();
            for (i, dc) in d.0.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Yun's algorithm: `(factor, multiplicity)` with square-free, pairwise
    /// coprime factors of positive degree.
    fn square_free(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.degree() == 0 {
            return out;
        }
        let df = self.derivative();
        let b = self.gcd(&df);
        let mut c = self.div_rem(&b).0;
        let mut d = df.div_rem(&b).0.sub(&c.derivative());
        let mut i = 1;
        while c.degree() > 0 {
            let a = c.gcd(&d);
            c = c.div_rem(&a).0;
            d = d.div_rem(&a).0.sub(&c.derivative());
            if a.degree() > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].div_rem(&seq[n - 1]).1.neg();
            if r.is_zero() {
                break;
            }
            seq.push(r);
        }
        seq
    }

    /// Strict bound on the absolute value of every root.
    fn cauchy_bound(&self) -> BigRational {
        let lead = self.lead().abs();
        let max = self.0[..self.degree()]
            .iter()
            .map(|c| c.abs() / &lead)
            .fold(BigRational::zero(), |m, x| if x > m { x } else { m });
        (BigRational::one() + max).ceil() + BigRational::one()
    }
}

/// Integer polynomial, lowest degree first, evaluated only for its sign at
/// dyadic points `num / 2^k`.
struct IntPoly(Vec<BigInt>);

impl IntPoly {
    /// Positive multiple of `p` with integer coefficients.
    fn from_rational(p: &Poly) -> Self {
        let lcm = p.0.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        IntPoly(p.0.iter().map(|c| (c * &lcm).to_integer()).collect())
    }

    /// Sign of `2^{k·d} p(num / 2^k)`.
    fn sign_at(&self, x: &Dyadic) -> i8 {
        let d = self.0.len() - 1;
        let mut acc = self.0[d].clone();
        for i in (0..d).rev() {
            acc = acc * &x.num + (&self.0[i] << (x.k * (d - i)));
        }
        match acc.sign() {
            num_bigint::Sign::Plus => 1,
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
        }
    }
}

/// `num / 2^k`.
#[derive(Clone, Debug)]
struct Dyadic {
    num: BigInt,
    k: usize,
}

impl Dyadic {
    fn int(num: BigInt) -> Self {
        Dyadic { num, k: 0 }
    }

    fn with_exponent(&self, k: usize) -> BigInt {
        &self.num << (k - self.k)
    }

    /// `lo + (hi − lo)·t / 2^j` for integer `t`.
    fn between(lo: &Dyadic, hi: &Dyadic, t: u64, j: usize) -> Dyadic {
        let k = lo.k.max(hi.k);
        let (a, b) = (lo.with_exponent(k), hi.with_exponent(k));
        Dyadic {
            num: (a.clone() << j) + (b - a) * BigInt::from(t),
            k: k + j,
        }
    }

    fn width(lo: &Dyadic, hi: &Dyadic) -> f64 {
        let k = lo.k.max(hi.k);
        to_f64(&(hi.with_exponent(k) - lo.with_exponent(k)), k)
    }

    fn value(&self) -> f64 {
        to_f64(&self.num, self.k)
    }
}

fn to_f64(num: &BigInt, k: usize) -> f64 {
    let bits = num.bits() as usize;
    // keep the mantissa within f64 range before scaling
    let shift = bits.saturating_sub(1000).min(k);
    let m = (num >> shift).to_f64().unwrap_or(f64::NAN);
    m * 2f64.powi(-((k - shift) as i32))
}

fn sign_changes(seq: &[IntPoly], x: &Dyadic) -> usize {
    let mut changes = 0;
    let mut prev = 0i8;
    for p in seq {
        let s = p.sign_at(x);
        if s != 0 {
            if prev != 0 && s != prev {
                changes += 1;
            }
            prev = s;
        }
    }
    changes
}

/// Smallest `e` with `2^e` strictly above the Cauchy bound.
fn bound_exponent(f: &Poly) -> usize {
    let b = f.cauchy_bound().to_integer();
    b.bits() as usize
}

/// Distinct real roots of a square-free polynomial, ascending.
fn isolate_real_roots(f: &Poly, width: f64) -> Vec<f64> {
    let seq: Vec<IntPoly> = f.sturm_sequence().iter().map(IntPoly::from_rational).collect();
    let fi = &seq[0];
    let b = BigInt::one() << bound_exponent(f);
    let mut roots = Vec::new();
    // intervals (lo, hi] with non-root endpoints
    let mut work = vec![(Dyadic::int(-b.clone()), Dyadic::int(b))];
    while let Some((lo, hi)) = work.pop() {
        let count = sign_changes(&seq, &lo) - sign_changes(&seq, &hi);
        match count {
            0 => {}
            1 => roots.push(refine(fi, lo, hi, width)),
            _ => {
                // split at 1/2, else 1/4, 1/8, ... until the split point is not a root
                let mut j = 1;
                let mut mid = Dyadic::between(&lo, &hi, 1, j);
                while fi.sign_at(&mid) == 0 {
                    j += 1;
                    mid = Dyadic::between(&lo, &hi, 1, j);
                }
                work.push((lo, mid.clone()));
                work.push((mid, hi));
            }
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots
}

fn refine(f: &IntPoly, mut lo: Dyadic, mut hi: Dyadic, width: f64) -> f64 {
    let lo_sign = f.sign_at(&lo);
    for _ in 0..200 {
        if Dyadic::width(&lo, &hi) <= width * hi.value().abs().max(1.0) {
            break;
        }
        let mid = Dyadic::between(&lo, &hi, 1, 1);
        let s = f.sign_at(&mid);
        if s == 0 {
            return mid.value();
        }
        if s == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Dyadic::between(&lo, &hi, 1, 1).value()
}

/// Real roots of the integer polynomial with coefficients in descending
/// degree order, as `(value, multiplicity)` ascending. Non-real roots are
/// omitted.
pub fn real_roots(coeffs_descending: &[BigInt]) -> Vec<(f64, usize)> {
    let p = Poly::from_descending(coeffs_descending);
    let mut out: Vec<(f64, usize)> = p
        .square_free()
        .into_iter()
        .flat_map(|(factor, mult)| {
            isolate_real_roots(&factor, 1e-15)
                .into_iter()
                .map(move |r| (r, mult))
        })
        .collect();
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    out
}
