//! Closed-form counts `a_s(Δ_n)` and `a(Δ_n)`, exact.
//!
//! Every rational expression is evaluated through an integral route:
//!
//! * Bailey bracket `[t, s] = (s+t)/t · C(t,s) = C(t,s) + C(t-1,s-1)`
//! * Catalan bracket `]t, s[ = (t-2s+1)/(t-s+1) · C(t,s) = C(t,s) - C(t,s-1)`
//!
//! Degenerate ranks follow the usual conventions: `A_0` and `B_0` are the
//! empty type (`a_0 = 1`), `B_1 = A_1`, `D_2 = A_1 ⊔ A_1`, `D_3 = A_3`,
//! `E_3 = A_2 ⊔ A_1`, `E_4 = A_4`, `E_5 = D_5`. Disjoint unions count by
//! convolution of their rows.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::root_datum::Series;

pub type ExactInt = BigUint;

/// `C(t, s)`, zero when `s > t`.
pub fn binom(t: u64, s: u64) -> ExactInt {
    if s > t {
        return ExactInt::zero();
    }
    let k = s.min(t - s);
    let mut acc = ExactInt::one();
    for i in 1..=k {
        acc *= t - k + i;
        acc /= i;
    }
    acc
}

/// `[t, s] = (s+t)/t · C(t,s)`, for `t ≥ 1` and `0 ≤ s ≤ t`.
pub fn bailey(t: u64, s: u64) -> Result<ExactInt> {
    if t == 0 {
        return Err(Error::OutOfRange(
            "Bailey bracket [0, 0] involves 0/0 and is undefined".into(),
        ));
    }
    if s > t {
        return Err(Error::OutOfRange(format!("Bailey bracket [{t}, {s}] needs s <= t")));
    }
    Ok(if s == 0 {
        ExactInt::one()
    } else {
        binom(t, s) + binom(t - 1, s - 1)
    })
}

/// `]t, s[ = (t-2s+1)/(t-s+1) · C(t,s)`, for `2s ≤ t+1`.
pub fn catalan_bracket(t: u64, s: u64) -> Result<ExactInt> {
    if 2 * s > t + 1 {
        return Err(Error::OutOfRange(format!(
            "Catalan bracket ]{t}, {s}[ needs 2s <= t+1"
        )));
    }
    Ok(if s == 0 {
        ExactInt::one()
    } else {
        binom(t, s) - binom(t, s - 1)
    })
}

/// One row of the exceptional table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalRow {
    pub label: &'static str,
    pub series: Series,
    pub rank: usize,
    pub values: Vec<ExactInt>,
    pub total: ExactInt,
}

#[derive(Clone, Debug)]
pub struct ExceptionalTable {
    rows: Vec<ExceptionalRow>,
}

const EXCEPTIONAL: &[(&str, Series, usize, &[u64], u64)] = &[
    ("E3", Series::E, 3, &[1, 3, 4, 2], 10),
    ("E4", Series::E, 4, &[1, 4, 9, 14, 14], 42),
    ("E5", Series::E, 5, &[1, 5, 14, 30, 55, 77], 182),
    ("E6", Series::E, 6, &[1, 6, 20, 50, 110, 228, 418], 833),
    ("E7", Series::E, 7, &[1, 7, 27, 77, 187, 429, 1001, 2431], 4160),
    (
        "E8",
        Series::E,
        8,
        &[1, 8, 35, 112, 299, 728, 1771, 4784, 17342],
        25080,
    ),
    ("B3", Series::B, 3, &[1, 3, 6, 10], 20),
    ("F4", Series::F, 4, &[1, 4, 10, 24, 66], 105),
    ("G2", Series::G, 2, &[1, 2, 5], 8),
];

impl ExceptionalTable {
    fn load() -> Self {
        let rows = EXCEPTIONAL
            .iter()
            .map(|&(label, series, rank, values, total)| {
                let sum: u64 = values.iter().sum();
                assert_eq!(sum, total, "exceptional row {label} does not sum to its total");
                assert_eq!(values.len(), rank + 1, "exceptional row {label} has wrong length");
                ExceptionalRow {
                    label,
                    series,
                    rank,
                    values: values.iter().map(|&v| ExactInt::from(v)).collect(),
                    total: ExactInt::from(total),
                }
            })
            .collect();
        ExceptionalTable { rows }
    }

    pub fn rows(&self) -> &[ExceptionalRow] {
        &self.rows
    }

    pub fn get(&self, series: Series, rank: usize) -> Option<&ExceptionalRow> {
        self.rows.iter().find(|r| r.series == series && r.rank == rank)
    }
}

pub fn exceptional_table() -> &'static ExceptionalTable {
    static TABLE: OnceLock<ExceptionalTable> = OnceLock::new();
    TABLE.get_or_init(ExceptionalTable::load)
}

/// Whether `(series, n)` has closed-form counts (including the degenerate
/// ranks `A_0`, `B_0`).
pub fn is_admissible(series: Series, n: usize) -> bool {
    match series {
        Series::A | Series::B => true,
        Series::C | Series::D => n >= 2,
        Series::E => (3..=8).contains(&n),
        Series::F => n == 4,
        Series::G => n == 2,
    }
}

fn check_admissible(series: Series, n: usize) -> Result<()> {
    if is_admissible(series, n) {
        Ok(())
    } else {
        Err(Error::InadmissibleRank { series, rank: n })
    }
}

/// Row convolution: counts for a disjoint union.
pub fn convolve(a: &[ExactInt], b: &[ExactInt]) -> Vec<ExactInt> {
    let mut out = vec![ExactInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `a_s(Δ_n)`.
pub fn a_s(series: Series, n: usize, s: usize) -> Result<ExactInt> {
    check_admissible(series, n)?;
    if s > n {
        return Err(Error::OutOfRange(format!("{series}{n} has no support-rank {s}")));
    }
    let (n64, s64) = (n as u64, s as u64);
    match series {
        Series::A => catalan_bracket(n64 + s64, s64),
        Series::B | Series::C => Ok(if s < n {
            binom(n64 + s64 - 1, s64)
        } else if n == 0 {
            ExactInt::one()
        } else {
            binom(2 * n64 - 1, n64 - 1)
        }),
        Series::D => {
            if s == 0 {
                Ok(ExactInt::one())
            } else if s < n {
                bailey(n64 + s64 - 2, s64)
            } else {
                bailey(2 * n64 - 2, n64 - 2)
            }
        }
        Series::E if n == 3 => {
            let row = convolve(&a_row(Series::A, 2)?, &a_row(Series::A, 1)?);
            Ok(row[s].clone())
        }
        Series::E if n == 4 => a_s(Series::A, 4, s),
        Series::E if n == 5 => a_s(Series::D, 5, s),
        Series::E | Series::F | Series::G => Ok(exceptional_table()
            .get(series, n)
            .expect("admissible exceptional type has a table row")
            .values[s]
            .clone()),
    }
}

/// `a_s(Δ_n)`, or zero for `s > n`.
pub fn a_s_or_zero(series: Series, n: usize, s: usize) -> Result<ExactInt> {
    if s > n {
        check_admissible(series, n)?;
        Ok(ExactInt::zero())
    } else {
        a_s(series, n, s)
    }
}

/// `a_0(Δ_n), …, a_n(Δ_n)`.
pub fn a_row(series: Series, n: usize) -> Result<Vec<ExactInt>> {
    (0..=n).map(|s| a_s(series, n, s)).collect()
}

/// `a(Δ_n)` from its own closed form (not by summing the row).
pub fn a_total(series: Series, n: usize) -> Result<ExactInt> {
    check_admissible(series, n)?;
    let n64 = n as u64;
    match series {
        Series::A => catalan_bracket(2 * n64 + 2, n64 + 1),
        Series::B | Series::C => Ok(binom(2 * n64, n64)),
        Series::D => bailey(2 * n64 - 1, n64 - 1),
        Series::E if n <= 5 => Ok(a_row(series, n)?.into_iter().sum()),
        Series::E | Series::F | Series::G => Ok(exceptional_table()
            .get(series, n)
            .expect("admissible exceptional type has a table row")
            .total
            .clone()),
    }
}

/// One evaluated identity `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub name: String,
    pub lhs: ExactInt,
    pub rhs: ExactInt,
}

impl Identity {
    fn new(name: impl Into<String>, lhs: ExactInt, rhs: ExactInt) -> Self {
        Identity {
            name: name.into(),
            lhs,
            rhs,
        }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Hook formula parameters `(m, c)`: valid for `n ≥ m`, `1 ≤ s ≤ n - c`.
pub fn hook_range(series: Series) -> Option<(usize, usize)> {
    match series {
        Series::A => Some((1, 0)),
        Series::B | Series::C => Some((2, 1)),
        Series::D => Some((3, 2)),
        Series::E => Some((4, 3)),
        Series::F | Series::G => None,
    }
}

/// `a_s(Δ_n) = a_s(Δ_{n-1}) + a_{s-1}(Δ_n)`.
pub fn hook_check(series: Series, n: usize, s: usize) -> Result<Identity> {
    let (m, c) = hook_range(series)
        .ok_or_else(|| Error::OutOfRange(format!("no hook formula for series {series}")))?;
    if n < m || s < 1 || s + c > n || !is_admissible(series, n) {
        return Err(Error::OutOfRange(format!("hook formula for {series}{n}, s={s}")));
    }
    Ok(Identity::new(
        format!("hook {series}{n} s={s}"),
        a_s(series, n, s)?,
        a_s_or_zero(series, n - 1, s)? + a_s(series, n, s - 1)?,
    ))
}

/// The modified hook formula for `D_n` (`n ≥ 3`) and `E_n` (`4 ≤ n ≤ 8`).
pub fn modified_hook_check(series: Series, n: usize) -> Result<Identity> {
    match series {
        Series::D if n >= 3 => Ok(Identity::new(
            format!("modified hook D{n}"),
            a_s(Series::D, n, n - 1)?,
            a_s(Series::D, n - 1, n - 1)?
                + a_s(Series::D, n, n - 2)?
                + a_s(Series::A, n - 2, n - 2)?,
        )),
        Series::E if (4..=8).contains(&n) => Ok(Identity::new(
            format!("modified hook E{n}"),
            a_s(Series::E, n, n - 2)?,
            a_s(Series::E, n - 1, n - 2)?
                + a_s(Series::E, n, n - 3)?
                + a_s(Series::A, n - 3, n - 3)?,
        )),
        _ => Err(Error::OutOfRange(format!("modified hook formula for {series}{n}"))),
    }
}

/// `a_{n-1}(D_n) = [2n-3, n-1]`.
pub fn d_subdiagonal_check(n: usize) -> Result<Identity> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("D subdiagonal needs n >= 2, got {n}")));
    }
    let n64 = n as u64;
    Ok(Identity::new(
        format!("D subdiagonal n={n}"),
        a_s(Series::D, n, n - 1)?,
        bailey(2 * n64 - 3, n64 - 1)?,
    ))
}

fn check_summation_series(series: Series, n: usize) -> Result<()> {
    let ok = match series {
        Series::A => true,
        Series::B | Series::C => n >= 1 && is_admissible(series, n),
        Series::D => n >= 2,
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("summation formula for {series}{n}")))
    }
}

/// `Σ_{i=0}^{s} a_i(Δ_n) = a_s(Δ_{n+1})` for `1 ≤ s ≤ n-1`.
pub fn summation_check(series: Series, n: usize, s: usize) -> Result<Identity> {
    check_summation_series(series, n)?;
    if s < 1 || s + 1 > n {
        return Err(Error::OutOfRange(format!("summation formula for {series}{n}, s={s}")));
    }
    let lhs = (0..=s)
        .map(|i| a_s(series, n, i))
        .sum::<Result<ExactInt>>()?;
    Ok(Identity::new(
        format!("summation {series}{n} s={s}"),
        lhs,
        a_s(series, n + 1, s)?,
    ))
}

/// `a(Δ_n) = a_n(Δ_n) + a_{n-1}(Δ_{n+1})`.
pub fn total_split_check(series: Series, n: usize) -> Result<Identity> {
    check_summation_series(series, n)?;
    if n < 1 {
        return Err(Error::OutOfRange(format!("total split for {series}{n}")));
    }
    Ok(Identity::new(
        format!("total split {series}{n}"),
        a_total(series, n)?,
        a_s(series, n, n)? + a_s(series, n + 1, n - 1)?,
    ))
}

/// The closed form for `a(Δ_n)` agrees with the row sum.
pub fn total_sum_check(series: Series, n: usize) -> Result<Identity> {
    Ok(Identity::new(
        format!("total {series}{n}"),
        a_total(series, n)?,
        a_row(series, n)?.into_iter().sum(),
    ))
}

/// `[2n-2, n] = a_n(D_n) + a_{n-1}(A_{n-1})`, and
/// `a_{n-1}(A_{n-1}) = C(2n-2, n-1) / n`.
pub fn comparison_check(n: usize) -> Result<Vec<Identity>> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("comparison needs n >= 2, got {n}")));
    }
    let n64 = n as u64;
    let catalan = a_s(Series::A, n - 1, n - 1)?;
    Ok(vec![
        Identity::new(
            format!("Lucas vs D n={n}"),
            bailey(2 * n64 - 2, n64)?,
            a_s(Series::D, n, n)? + &catalan,
        ),
        Identity::new(
            format!("Catalan C(2n-2,n-1)/n n={n}"),
            catalan * n64,
            binom(2 * n64 - 2, n64 - 1),
        ),
    ])
}

/// Sum sequence as a diagonal and the repeated main diagonal.
pub fn diagonal_checks(series: Series, n: usize) -> Result<Vec<Identity>> {
    let mut out = Vec::new();
    match series {
        Series::A => {
            out.push(Identity::new(
                format!("A sum diagonal n={n}"),
                a_total(Series::A, n)?,
                a_s(Series::A, n + 1, n + 1)?,
            ));
            if n >= 1 {
                out.push(Identity::new(
                    format!("A main diagonal n={n}"),
                    a_s(Series::A, n, n)?,
                    a_s(Series::A, n, n - 1)?,
                ));
            }
        }
        Series::B | Series::C => {
            check_admissible(series, n)?;
            out.push(Identity::new(
                format!("{series} sum diagonal n={n}"),
                a_total(series, n)?,
                a_s(series, n + 1, n)?,
            ));
            if n >= 1 {
                out.push(Identity::new(
                    format!("{series} main diagonal n={n}"),
                    a_s(series, n, n)?,
                    a_s(series, n + 1, n - 1)?,
                ));
            }
        }
        Series::D => {
            check_admissible(series, n)?;
            out.push(Identity::new(
                format!("D sum diagonal n={n}"),
                a_total(Series::D, n)?,
                a_s(Series::D, n + 2, n - 1)?,
            ));
            out.push(Identity::new(
                format!("D main diagonal n={n}"),
                a_s(Series::D, n, n)?,
                a_s(Series::D, n + 2, n - 2)?,
            ));
        }
        _ => return Err(Error::OutOfRange(format!("no diagonal identities for {series}"))),
    }
    Ok(out)
}

/// The split `a_n(B_n) = u(B_n) + v(B_n)` and the relation between A and B.
pub fn b_decomposition_check(n: usize) -> Result<Vec<Identity>> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("B decomposition needs n >= 2, got {n}")));
    }
    let n64 = n as u64;
    let u = u_convolution(n)?.into_iter().sum::<ExactInt>();
    let catalan = a_s(Series::A, n - 1, n - 1)?;
    let v_closed = binom(2 * n64 - 2, n64 - 2);
    Ok(vec![
        Identity::new(
            format!("binomial split n={n}"),
            binom(2 * n64 - 2, n64 - 1) + binom(2 * n64 - 2, n64 - 2),
            binom(2 * n64 - 1, n64 - 1),
        ),
        Identity::new(
            format!("u(B{n}) convolution"),
            u.clone(),
            binom(2 * n64 - 2, n64 - 1),
        ),
        Identity::new(format!("u(B{n}) = a_(n-1)(B{n})"), u.clone(), a_s(Series::B, n, n - 1)?),
        Identity::new(
            format!("v(B{n}) = u - catalan"),
            u.clone(),
            v_closed.clone() + &catalan,
        ),
        Identity::new(
            format!("v(B{n}) = a_(n-2)(B{})", n + 1),
            v_closed.clone(),
            a_s(Series::B, n + 1, n - 2)?,
        ),
        Identity::new(
            format!("a_n(B{n}) = u + v"),
            a_s(Series::B, n, n)?,
            u + v_closed,
        ),
        Identity::new(
            format!("A/B relation n={n}"),
            a_s(Series::B, n, n - 1)?,
            a_s(Series::B, n + 1, n - 2)? + catalan,
        ),
    ])
}

/// `u_i(B_n) = a_{i-1}(A_{i-1}) · a_{n-i}(B_{n-i})` for `i = 1..n`.
pub fn u_convolution(n: usize) -> Result<Vec<ExactInt>> {
    (1..=n)
        .map(|i| Ok(a_s(Series::A, i - 1, i - 1)? * a_s(Series::B, n - i, n - i)?))
        .collect()
}

/// The three triangles that shear onto the A, B and D triangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShearedTriangle {
    /// Sheared Catalan triangle, `z_s(t) = C(t+1,s) - C(t+1,s-1)`, `2s ≤ t+2`.
    Catalan,
    /// Pascal triangle `C(t,s)`.
    Pascal,
    /// Lucas triangle `[t, s]`, `t ≥ 1`.
    Lucas,
}

impl ShearedTriangle {
    pub fn series(self) -> Series {
        match self {
            ShearedTriangle::Catalan => Series::A,
            ShearedTriangle::Pascal => Series::B,
            ShearedTriangle::Lucas => Series::D,
        }
    }

    /// `k` in the shear `a_s(n) = z_s(n+s-k)`: 1 for A and B, 2 for D.
    pub fn shear_offset(self) -> u64 {
        match self {
            ShearedTriangle::Lucas => 2,
            _ => 1,
        }
    }

    /// Entry `z_s(t)`; `None` outside the triangle.
    pub fn z(self, t: u64, s: u64) -> Option<ExactInt> {
        match self {
            ShearedTriangle::Catalan => (2 * s <= t + 2).then(|| {
                if s == 0 {
                    ExactInt::one()
                } else {
                    binom(t + 1, s) - binom(t + 1, s - 1)
                }
            }),
            ShearedTriangle::Pascal => (s <= t).then(|| binom(t, s)),
            ShearedTriangle::Lucas => bailey(t, s).ok(),
        }
    }
}

/// All checks attached to the sheared triangles up to row `max_t`:
/// shear onto `a_s`, initial conditions, the recursion, and the hockey stick
/// `z_s(t) = Σ_{i=0}^{s} z_i(t-s+i-1)`.
pub fn sheared_checks(tri: ShearedTriangle, max_t: u64) -> Result<Vec<Identity>> {
    let series = tri.series();
    let tag = format!("{tri:?}");
    let mut out = Vec::new();
    let z = |t: u64, s: u64| tri.z(t, s);

    // shear: a_s(n) = z_s(n+s-k)
    for t in 0..=max_t {
        for s in 0..=t {
            let Some(n) = (t + tri.shear_offset()).checked_sub(s) else { continue };
            let n = n as usize;
            let diag_ok = match series {
                Series::D => (s as usize) < n && n >= 2,
                _ => (s as usize) <= n,
            };
            if !diag_ok || !is_admissible(series, n) {
                continue;
            }
            if let Some(v) = z(t, s) {
                out.push(Identity::new(
                    format!("{tag} shear t={t} s={s}"),
                    v,
                    a_s(series, n, s as usize)?,
                ));
            }
        }
    }

    // initial conditions
    for t in 0..=max_t {
        match tri {
            ShearedTriangle::Pascal => {
                out.push(Identity::new(format!("{tag} z_0({t})"), z(t, 0).unwrap(), ExactInt::one()));
                out.push(Identity::new(format!("{tag} z_t({t})"), z(t, t).unwrap(), ExactInt::one()));
            }
            ShearedTriangle::Lucas if t >= 1 => {
                out.push(Identity::new(format!("{tag} z_0({t})"), z(t, 0).unwrap(), ExactInt::one()));
                out.push(Identity::new(
                    format!("{tag} z_t({t})"),
                    z(t, t).unwrap(),
                    ExactInt::from(2u32),
                ));
            }
            ShearedTriangle::Catalan => {
                out.push(Identity::new(format!("{tag} z_0({t})"), z(t, 0).unwrap(), ExactInt::one()));
                if 2 * t <= max_t {
                    out.push(Identity::new(
                        format!("{tag} z_(t+1)(2t) t={t}"),
                        z(2 * t, t + 1).unwrap(),
                        ExactInt::zero(),
                    ));
                }
            }
            _ => {}
        }
    }

    // recursion z_s(t) = z_{s-1}(t-1) + z_s(t-1)
    let first_row = if tri == ShearedTriangle::Lucas { 2 } else { 1 };
    for t in first_row..=max_t {
        for s in 1..=t {
            if let (Some(lhs), Some(a), Some(b)) = (z(t, s), z(t - 1, s - 1), z(t - 1, s)) {
                out.push(Identity::new(format!("{tag} recursion t={t} s={s}"), lhs, a + b));
            }
        }
    }

    // hockey stick
    let lowest = if tri == ShearedTriangle::Lucas { 1 } else { 0 };
    for t in 1..=max_t {
        for s in 1..t {
            if t < s + 1 + lowest {
                continue;
            }
            let Some(lhs) = z(t, s) else { continue };
            let terms: Option<Vec<ExactInt>> = (0..=s).map(|i| z(t - s + i - 1, i)).collect();
            if let Some(terms) = terms {
                out.push(Identity::new(
                    format!("{tag} hockey stick t={t} s={s}"),
                    lhs,
                    terms.into_iter().sum(),
                ));
            }
        }
    }
    Ok(out)
}

/// `C(2n-2, n-2) = C(2n-2, n)` while `[2n-2, n-2] ≠ [2n-2, n]`.
pub fn d_deviation_check(n: usize) -> Result<(Identity, bool)> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("D deviation needs n >= 3, got {n}")));
    }
    let n64 = n as u64;
    let same = Identity::new(
        format!("C(2n-2,n-2) = C(2n-2,n) n={n}"),
        binom(2 * n64 - 2, n64 - 2),
        binom(2 * n64 - 2, n64),
    );
    let differs = bailey(2 * n64 - 2, n64 - 2)? != bailey(2 * n64 - 2, n64)?;
    Ok((same, differs))
}
