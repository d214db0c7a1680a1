//! A small formal intersection ring for a threefold with classes `K`, `L`,
//! `c₂`, `c₃`. Polynomials are truncated above codimension three and
//! evaluated against a table of the seven degree-three intersection numbers.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = Ratio<i128>;

/// Exponents of `K`, `L`, `c₂`, `c₃`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub k: u8,
    pub l: u8,
    pub c2: u8,
    pub c3: u8,
}

impl Monomial {
    const ONE: Monomial = Monomial {
        k: 0,
        l: 0,
        c2: 0,
        c3: 0,
    };

    pub fn codim(&self) -> u32 {
        self.k as u32 + self.l as u32 + 2 * self.c2 as u32 + 3 * self.c3 as u32
    }

    fn times(self, o: Monomial) -> Monomial {
        Monomial {
            k: self.k + o.k,
            l: self.l + o.l,
            c2: self.c2 + o.c2,
            c3: self.c3 + o.c3,
        }
    }
}

/// Degree-three intersection numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TopNumbers {
    pub k3: i64,
    pub k2l: i64,
    pub kl2: i64,
    pub l3: i64,
    pub c2k: i64,
    pub c2l: i64,
    pub c3: i64,
}

impl TopNumbers {
    fn value(&self, m: Monomial) -> Option<i64> {
        Some(match (m.k, m.l, m.c2, m.c3) {
            (3, 0, 0, 0) => self.k3,
            (2, 1, 0, 0) => self.k2l,
            (1, 2, 0, 0) => self.kl2,
            (0, 3, 0, 0) => self.l3,
            (1, 0, 1, 0) => self.c2k,
            (0, 1, 1, 0) => self.c2l,
            (0, 0, 0, 1) => self.c3,
            _ => return None,
        })
    }
}

/// Element of the truncated ring with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Class {
    terms: BTreeMap<Monomial, Q>,
}

impl Class {
    fn mono(m: Monomial, c: Q) -> Class {
        let mut out = Class::default();
        out.push(m, c);
        out
    }

    fn push(&mut self, m: Monomial, c: Q) {
        if m.codim() > 3 || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scalar(c: impl Into<Q>) -> Class {
        Class::mono(Monomial::ONE, c.into())
    }

    pub fn k() -> Class {
        Class::mono(
            Monomial {
                k: 1,
                ..Monomial::ONE
            },
            Q::from(1),
        )
    }

    pub fn l() -> Class {
        Class::mono(
            Monomial {
                l: 1,
                ..Monomial::ONE
            },
            Q::from(1),
        )
    }

    pub fn c2() -> Class {
        Class::mono(
            Monomial {
                c2: 1,
                ..Monomial::ONE
            },
            Q::from(1),
        )
    }

    pub fn c3() -> Class {
        Class::mono(
            Monomial {
                c3: 1,
                ..Monomial::ONE
            },
            Q::from(1),
        )
    }

    pub fn scale(&self, c: impl Into<Q>) -> Class {
        let c = c.into();
        let mut out = Class::default();
        for (&m, &v) in &self.terms {
            out.push(m, v * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Class {
        (0..n).fold(Class::scalar(1), |acc, _| &acc * self)
    }

    pub fn is_homogeneous(&self, codim: u32) -> bool {
        self.terms.keys().all(|m| m.codim() == codim)
    }

    /// Pairs the codimension-three part with `top`. Lower-codimension terms
    /// must be absent.
    pub fn degree(&self, top: &TopNumbers) -> Result<Q> {
        let mut acc = Q::zero();
        for (&m, &c) in &self.terms {
            let v = top
                .value(m)
                .ok_or_else(|| Error::Internal(format!("cannot integrate monomial {m:?}")))?;
            acc += c * Q::from(v as i128);
        }
        Ok(acc)
    }
}

impl Add for &Class {
    type Output = Class;

    fn add(self, o: &Class) -> Class {
        let mut out = self.clone();
        for (&m, &c) in &o.terms {
            out.push(m, c);
        }
        out
    }
}

impl Sub for &Class {
    type Output = Class;

    fn sub(self, o: &Class) -> Class {
        self + &(-o)
    }
}

impl Neg for &Class {
    type Output = Class;

    fn neg(self) -> Class {
        self.scale(-1)
    }
}

impl Mul for &Class {
    type Output = Class;

    fn mul(self, o: &Class) -> Class {
        let mut out = Class::default();
        for (&m1, &c1) in &self.terms {
            for (&m2, &c2) in &o.terms {
                out.push(m1.times(m2), c1 * c2);
            }
        }
        out
    }
}

fn q(num: i64, den: i64) -> Q {
    Q::new(num as i128, den as i128)
}

/// `χ(N)` for the normal bundle of a threefold scroll `X ⊂ P^n` with
/// hyperplane class `L`, using the Chern classes of `N = T_{P^n}|_X / T_X`
/// and Hirzebruch–Riemann–Roch with `χ(O_X) = 1`.
pub fn chi_normal_bundle(n: i64, top: &TopNumbers) -> Result<i64> {
    let (k, l, c2, c3) = (Class::k(), Class::l(), Class::c2(), Class::c3());
    let m = n + 1;

    let n1 = &k + &l.scale(q(m, 1));
    let n2 = &(&(&l.pow(2).scale(q(n * m, 2)) + &(&l * &k).scale(q(m, 1))) + &k.pow(2)) - &c2;
    let n3 = {
        let mut t = l.pow(3).scale(q((n - 1) * n * m, 6));
        t = &t + &(&k * &l.pow(2)).scale(q(n * m, 2));
        t = &t + &(&k.pow(2) * &l).scale(q(m, 1));
        t = &t - &(&c2 * &l).scale(q(m, 1));
        t = &t - &(&c2 * &k).scale(q(2, 1));
        t = &t + &k.pow(3);
        &t - &c3
    };

    let c1x = -&k;
    let td2 = &k.pow(2) + &c2;

    let cubic = &(&n1.pow(3) - &(&n1 * &n2).scale(q(3, 1))) + &n3.scale(3);
    let quad = &n1.pow(2) - &n2.scale(q(2, 1));
    let chi_form =
        &(&cubic.scale(q(1, 6)) + &(&c1x * &quad).scale(q(1, 4))) + &(&td2 * &n1).scale(q(1, 12));

    if !chi_form.is_homogeneous(3) {
        return Err(Error::Internal(
            "normal bundle HRR expansion left terms below codimension three".into(),
        ));
    }
    let value = chi_form.degree(top)? + Q::from((n - 3) as i128);
    if !value.is_integer() {
        return Err(Error::Internal(format!("χ(N) = {value} is not an integer")));
    }
    value
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::Internal(format!("χ(N) = {value} exceeds i64")))
}
