//! Independent reference computations, written without the library's
//! cohomology or splitting code.
#![allow(dead_code)]

/// `(a, b)` stands for `aC + bf` on `F_e`.
pub type Cls = (i64, i64);

pub fn dot(e: i64, x: Cls, y: Cls) -> i64 {
    -e * x.0 * y.0 + x.0 * y.1 + x.1 * y.0
}

pub fn canonical(e: i64) -> Cls {
    (-2, -e - 2)
}

/// Monomials `x^u y^v` spanning sections of `aC + bf`, counted one at a time.
pub fn h0(e: i64, d: Cls) -> i64 {
    let (a, b) = d;
    let mut n = 0;
    for v in 0..=a {
        for _u in 0..=b - e * v {
            n += 1;
        }
    }
    n
}

pub fn chi(e: i64, d: Cls) -> i64 {
    let k = canonical(e);
    let twice = dot(e, d, (d.0 - k.0, d.1 - k.1));
    assert_eq!(twice % 2, 0);
    twice / 2 + 1
}

pub fn h2(e: i64, d: Cls) -> i64 {
    let k = canonical(e);
    h0(e, (k.0 - d.0, k.1 - d.1))
}

pub fn h1(e: i64, d: Cls) -> i64 {
    h0(e, d) + h2(e, d) - chi(e, d)
}

pub fn classes(e: i64, b: i64, k: i64) -> (Cls, Cls) {
    ((2, 2 * b - k - 2 * e), (1, k - b + 2 * e))
}

/// `h⁰(⊕ O(a_i + t))`.
pub fn h0_split(parts: &[i64], t: i64) -> i64 {
    parts.iter().map(|&a| (a + t + 1).max(0)).sum()
}

/// Semicontinuity test: `special` is a specialization of `general` iff ranks
/// and degrees agree and `h⁰` never drops under any twist.
pub fn twist_criterion(general: &[i64], special: &[i64]) -> bool {
    if general.len() != special.len() {
        return false;
    }
    if general.iter().sum::<i64>() != special.iter().sum::<i64>() {
        return false;
    }
    let lo = general.iter().chain(special).copied().max().unwrap();
    let hi = general.iter().chain(special).copied().min().unwrap();
    (-lo - 2..=-hi + 2).all(|t| h0_split(general, t) <= h0_split(special, t))
}

/// Every `(e, b, k)` with `2 <= e <= 8`, `3e + 1 <= b <= 40`, `b - e < k < 2b - 4e`.
pub fn scan_box() -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for e in 2..=8 {
        for b in 3 * e + 1..=40 {
            for k in b - e + 1..2 * b - 4 * e {
                out.push((e, b, k));
            }
        }
    }
    out
}
