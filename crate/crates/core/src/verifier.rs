//! Cross-checks enumeration against the closed forms and collects the
//! outcome in a deterministic, line-oriented report.
//!
//! Report format, one check per line, tab separated:
//!
//! ```text
//! <id>\t<subject>\t<expected>\t<actual>\t<PASS|FAIL>
//! ```
//!
//! Lines starting with `#` are header notes and the closing summary.

use std::fmt::{self, Display, Write as _};
use std::path::PathBuf;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::ar_orbits::{knit_category, ModCategory};
use crate::closed_forms::{self as cf, ShearedTriangle};
use crate::enumerator::{self as en, CountTable, IndecSet, Kind};
use crate::error::{Error, Result};
use crate::oeis_io::{self, TriangleKind};
use crate::root_datum::{build_cartan, DynkinType, OrientationSpec, Series};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub subject: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    /// Passes when both sides render to the same text.
    pub fn compare(id: &str, subject: &str, expected: impl Display, actual: impl Display) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check {
            id: id.to_string(),
            subject: subject.to_string(),
            pass: expected == actual,
            expected,
            actual,
        }
    }

    pub fn failure(id: &str, subject: &str, message: impl Display) -> Self {
        Check {
            id: id.to_string(),
            subject: subject.to_string(),
            expected: "-".to_string(),
            actual: message.to_string(),
            pass: false,
        }
    }

    fn identity(id: &str, ident: &cf::Identity) -> Self {
        Check {
            id: id.to_string(),
            subject: ident.name.clone(),
            expected: ident.lhs.to_string(),
            actual: ident.rhs.to_string(),
            pass: ident.holds(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}",
            self.id,
            self.subject,
            self.expected,
            self.actual,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub notes: Vec<String>,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn append(&mut self, other: VerificationReport) {
        self.notes.extend(other.notes);
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn summary(&self) -> String {
        format!(
            "{} checks, {} failed",
            self.checks.len(),
            self.failures().count()
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("# tiltcount verification report\n");
        for n in &self.notes {
            writeln!(out, "# {n}").unwrap();
        }
        out.push_str("# id\tsubject\texpected\tactual\tstatus\n");
        for c in &self.checks {
            writeln!(out, "{c}").unwrap();
        }
        writeln!(out, "# summary: {}", self.summary()).unwrap();
        out
    }

    fn single(check: Check) -> Self {
        VerificationReport {
            notes: Vec::new(),
            checks: vec![check],
        }
    }
}

fn join<T: Display>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn tables(cat: &ModCategory) -> Result<(CountTable, CountTable)> {
    Ok((
        en::count_tables(cat, Kind::Antichain)?,
        en::count_tables(cat, Kind::SupportTilting)?,
    ))
}

fn category(ty: DynkinType, spec: &OrientationSpec) -> Result<ModCategory> {
    knit_category(&build_cartan(ty, spec)?)
}

/// Enumerates `ty` under each orientation and compares every statistic with
/// the closed forms and across orientations.
pub fn verify_type(ty: DynkinType, orientations: &[OrientationSpec]) -> Result<VerificationReport> {
    let roots = build_cartan(ty, &OrientationSpec::LinearDefault)?
        .positive_roots()?
        .len();
    if roots > 128 {
        return Err(Error::Infeasible {
            label: ty.to_string(),
            reason: format!("{roots} indecomposables; the search handles at most 128"),
        });
    }
    let expected_row = join(&cf::a_row(ty.series(), ty.rank())?);
    let expected_total = cf::a_total(ty.series(), ty.rank())?;

    let results: Vec<(String, Result<(CountTable, CountTable)>)> = orientations
        .par_iter()
        .map(|spec| {
            let subject = format!("{ty} orient={spec}");
            (subject, category(ty, spec).and_then(|c| tables(&c)))
        })
        .collect();

    let mut report = VerificationReport::default();
    let mut first: Option<(CountTable, CountTable)> = None;
    for (subject, res) in results {
        let (ac, st) = match res {
            Ok(t) => t,
            Err(e) => {
                report.push(Check::failure("enum.error", &subject, e));
                continue;
            }
        };
        let st_rank = join(&st.by_support_rank);
        let ac_rank = join(&ac.by_support_rank);
        report.push(Check::compare("enum.tilting.support_rank", &subject, &expected_row, &st_rank));
        report.push(Check::compare("enum.tilting.total", &subject, &expected_total, &st.total));
        report.push(Check::compare("enum.antichain.support_rank", &subject, &expected_row, &ac_rank));
        report.push(Check::compare("enum.antichain.total", &subject, &expected_total, &ac.total));
        report.push(Check::compare(
            "enum.antichain.size_total",
            &subject,
            &expected_total,
            ac.by_size.iter().sum::<num_bigint::BigUint>(),
        ));
        report.push(Check::compare("enum.equidistribution", &subject, &ac_rank, &st_rank));
        match &first {
            None => first = Some((ac, st)),
            Some((ac0, st0)) => {
                let pass = ac0.same_counts(&ac) && st0.same_counts(&st);
                report.push(Check {
                    id: "orient.invariant".into(),
                    subject,
                    expected: format!("{ac0} / {st0}"),
                    actual: format!("{ac} / {st}"),
                    pass,
                });
            }
        }
    }
    Ok(report)
}

/// Every acyclic orientation (all of them, the diagram being a forest).
pub fn all_orientations(ty: DynkinType) -> Vec<OrientationSpec> {
    ty.shape()
        .all_orientations()
        .into_iter()
        .map(OrientationSpec::Explicit)
        .collect()
}

/// `count` orientations drawn from a ChaCha8 stream seeded by `seed` and the type.
pub fn random_orientations(ty: DynkinType, count: usize, seed: u64) -> Vec<OrientationSpec> {
    let shape = ty.shape();
    let m = shape.edges().len();
    let type_key = (ty.series() as u64) << 8 | ty.rank() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ type_key.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    (0..count)
        .map(|_| {
            let bits = if m == 0 { 0 } else { rng.random::<u64>() & ((1u64 << m) - 1) };
            OrientationSpec::Explicit(shape.orientation_from_bits(bits))
        })
        .collect()
}

/// `B_n` and `C_n` give the same tables.
pub fn verify_b_equals_c(n: usize) -> Result<VerificationReport> {
    let b = tables(&category(DynkinType::new(Series::B, n)?, &OrientationSpec::LinearDefault)?)?;
    let c = tables(&category(DynkinType::new(Series::C, n)?, &OrientationSpec::LinearDefault)?)?;
    let subject = format!("B{n} vs C{n}");
    let mut report = VerificationReport::default();
    for (id, x, y) in [("bc.antichain", &b.0, &c.0), ("bc.tilting", &b.1, &c.1)] {
        report.push(Check {
            id: id.into(),
            subject: subject.clone(),
            expected: x.to_string(),
            actual: y.to_string(),
            pass: x.same_counts(y),
        });
    }
    Ok(report)
}

fn eta_checks(cat: &ModCategory, antichains: &[IndecSet], subject: &str) -> Vec<Check> {
    let full = cat.full_support();
    let sincere: Vec<&IndecSet> = antichains.iter().filter(|a| a.support() == full).collect();
    let injective_free = antichains
        .iter()
        .filter(|a| a.members().iter().all(|&k| !cat.is_injective(k)))
        .count();
    let mut bad_image = 0usize;
    let mut bad_round_trip = 0usize;
    let mut images = Vec::with_capacity(sincere.len());
    for a in &sincere {
        match en::eta_map(cat, a) {
            Ok(w) => {
                if w.members().iter().any(|&k| cat.is_injective(k)) {
                    bad_image += 1;
                }
                if en::eta_inverse(cat, &w).ok().as_ref() != Some(*a) {
                    bad_round_trip += 1;
                }
                images.push(w);
            }
            Err(_) => bad_image += 1,
        }
    }
    images.sort();
    images.dedup();
    vec![
        Check::compare("eta.image_injective_free", subject, 0, bad_image),
        Check::compare("eta.round_trip", subject, 0, bad_round_trip),
        Check::compare("eta.injective", subject, sincere.len(), images.len()),
        Check::compare("eta.surjective", subject, injective_free, images.len()),
    ]
}

/// Sincere antichains of `B_n` (`2 ≤ n ≤ n_max`) split as `u + v`, the
/// per-vertex breakdown of `u`, and the η bijection.
pub fn verify_sincere_structure(n_max: usize) -> Result<VerificationReport> {
    let reports: Vec<Result<VerificationReport>> = (2..=n_max)
        .into_par_iter()
        .map(|n| {
            let n64 = n as u64;
            let cat = category(DynkinType::new(Series::B, n)?, &OrientationSpec::LinearDefault)?;
            let antichains = en::enumerate_antichains(&cat)?;
            let split = en::classify_sincere(&cat, &antichains);
            let subject = format!("B{n}");
            let mut r = VerificationReport::default();
            r.push(Check::compare("sincere.u", &subject, cf::binom(2 * n64 - 2, n64 - 1), split.u));
            r.push(Check::compare("sincere.v", &subject, cf::binom(2 * n64 - 2, n64 - 2), split.v));
            r.push(Check::compare(
                "sincere.total",
                &subject,
                cf::a_s(Series::B, n, n)?,
                split.u + split.v,
            ));
            r.push(Check::compare(
                "sincere.per_vertex",
                &subject,
                join(&cf::u_convolution(n)?),
                join(&split.per_vertex),
            ));
            r.push(Check::compare("sincere.at_most_one", &subject, 0, split.multiple));
            r.checks.extend(eta_checks(&cat, &antichains, &subject));
            Ok(r)
        })
        .collect();
    let mut out = VerificationReport::default();
    for r in reports {
        out.append(r?);
    }
    Ok(out)
}

/// For linear `A_n`: `a_n(A_n)` sincere antichains, `a(A_{n-1})` antichains
/// without injectives, and η between them.
pub fn verify_linear_a(n_max: usize) -> Result<VerificationReport> {
    let mut out = VerificationReport::default();
    for n in 1..=n_max {
        let cat = category(DynkinType::new(Series::A, n)?, &OrientationSpec::LinearDefault)?;
        let antichains = en::enumerate_antichains(&cat)?;
        let subject = format!("A{n} linear");
        let sincere = antichains.iter().filter(|a| a.support() == cat.full_support()).count();
        let injective_free = antichains
            .iter()
            .filter(|a| a.members().iter().all(|&k| !cat.is_injective(k)))
            .count();
        out.push(Check::compare("linear_a.sincere", &subject, cf::a_s(Series::A, n, n)?, sincere));
        out.push(Check::compare(
            "linear_a.injective_free",
            &subject,
            cf::a_total(Series::A, n - 1)?,
            injective_free,
        ));
        out.checks.extend(eta_checks(&cat, &antichains, &subject));
    }
    Ok(out)
}

fn push_identity(report: &mut VerificationReport, id: &str, ident: Result<cf::Identity>) {
    match ident {
        Ok(i) => report.push(Check::identity(id, &i)),
        Err(e) => report.push(Check::failure(id, "-", e)),
    }
}

fn push_identities(report: &mut VerificationReport, id: &str, idents: Result<Vec<cf::Identity>>) {
    match idents {
        Ok(v) => report.checks.extend(v.iter().map(|i| Check::identity(id, i))),
        Err(e) => report.push(Check::failure(id, "-", e)),
    }
}

/// All closed-form identities over every admissible argument up to `max_n`.
pub fn verify_identities(max_n: usize) -> VerificationReport {
    let mut r = VerificationReport::default();
    let hook_series = [Series::A, Series::B, Series::C, Series::D, Series::E];
    for series in hook_series {
        let (m, c) = cf::hook_range(series).expect("hook range");
        let top = if series == Series::E { max_n.min(8) } else { max_n };
        // C_{n-1} must exist
        let m = if series == Series::C { m.max(3) } else { m };
        for n in m..=top {
            for s in 1..=n - c {
                push_identity(&mut r, "id.hook", cf::hook_check(series, n, s));
            }
        }
    }
    for n in 3..=max_n {
        push_identity(&mut r, "id.modified_hook", cf::modified_hook_check(Series::D, n));
    }
    for n in 4..=max_n.min(8) {
        push_identity(&mut r, "id.modified_hook", cf::modified_hook_check(Series::E, n));
    }
    for n in 2..=max_n {
        push_identity(&mut r, "id.d_subdiagonal", cf::d_subdiagonal_check(n));
    }
    for (series, lo) in [(Series::A, 2), (Series::B, 2), (Series::C, 2), (Series::D, 2)] {
        for n in lo..=max_n {
            for s in 1..n {
                push_identity(&mut r, "id.summation", cf::summation_check(series, n, s));
            }
        }
    }
    for (series, lo) in [(Series::A, 1), (Series::B, 1), (Series::C, 2), (Series::D, 2)] {
        for n in lo..=max_n {
            push_identity(&mut r, "id.total_split", cf::total_split_check(series, n));
        }
    }
    for series in Series::ALL {
        for n in 0..=max_n {
            if cf::is_admissible(series, n) {
                push_identity(&mut r, "id.total", cf::total_sum_check(series, n));
            }
        }
    }
    for n in 2..=max_n {
        push_identities(&mut r, "id.comparison", cf::comparison_check(n));
    }
    for (series, lo) in [(Series::A, 0), (Series::B, 0), (Series::C, 2), (Series::D, 2)] {
        for n in lo..=max_n {
            push_identities(&mut r, "id.diagonal", cf::diagonal_checks(series, n));
        }
    }
    for n in 2..=max_n {
        push_identities(&mut r, "id.b_decomposition", cf::b_decomposition_check(n));
    }
    for n in 3..=max_n {
        match cf::d_deviation_check(n) {
            Ok((same, differs)) => {
                r.push(Check::identity("id.d_deviation", &same));
                r.push(Check::compare(
                    "id.d_deviation",
                    &format!("Lucas [2n-2,n-2] != [2n-2,n] n={n}"),
                    true,
                    differs,
                ));
            }
            Err(e) => r.push(Check::failure("id.d_deviation", "-", e)),
        }
    }
    let max_t = 2 * max_n as u64;
    for tri in [ShearedTriangle::Catalan, ShearedTriangle::Pascal, ShearedTriangle::Lucas] {
        push_identities(&mut r, "id.sheared", cf::sheared_checks(tri, max_t));
    }
    r
}

/// Reconciles every triangle against its full fixture.
pub fn verify_fixtures(dir: &std::path::Path) -> VerificationReport {
    let mut out = VerificationReport::default();
    for kind in TriangleKind::ALL {
        match oeis_io::read_fixture(dir, kind.sequence_id()) {
            Ok(b) => {
                let terms = b.entries.len();
                out.append(oeis_io::reconcile(kind, &b, terms));
            }
            Err(e) => out.push(Check::failure("oeis.fixture", kind.sequence_id(), e)),
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Quick,
    Full,
    Slow,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Quick => "quick",
            Suite::Full => "full",
            Suite::Slow => "slow",
        })
    }
}

pub const DEFAULT_SEED: u64 = 1729;

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub suite: Suite,
    pub max_n: usize,
    pub seed: u64,
    pub fixture_dir: PathBuf,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            suite: Suite::Quick,
            max_n: 50,
            seed: DEFAULT_SEED,
            fixture_dir: oeis_io::default_fixture_dir(),
        }
    }
}

/// Types enumerated under the default orientation by every suite.
pub fn default_types() -> Vec<DynkinType> {
    let mut out = Vec::new();
    let mut add = |s, lo, hi| {
        for n in lo..=hi {
            out.push(DynkinType::new(s, n).expect("admissible"));
        }
    };
    add(Series::A, 1, 7);
    add(Series::B, 1, 5);
    add(Series::C, 2, 5);
    add(Series::D, 2, 6);
    add(Series::E, 3, 6);
    add(Series::F, 4, 4);
    add(Series::G, 2, 2);
    out
}

type Task = Box<dyn Fn() -> Result<VerificationReport> + Send + Sync>;

/// Runs a suite. Tasks run in parallel; the report keeps task order.
pub fn run_suite(opts: &SuiteOptions) -> VerificationReport {
    let started = Instant::now();
    let mut tasks: Vec<(String, Task)> = Vec::new();

    let max_n = opts.max_n;
    tasks.push((format!("identities max_n={max_n}"), Box::new(move || Ok(verify_identities(max_n)))));
    for ty in default_types() {
        tasks.push((
            format!("{ty} default"),
            Box::new(move || verify_type(ty, &[OrientationSpec::LinearDefault])),
        ));
    }
    for ty in [
        DynkinType::new(Series::A, 4).expect("A4"),
        DynkinType::new(Series::D, 4).expect("D4"),
    ] {
        tasks.push((format!("{ty} all orientations"), Box::new(move || verify_type(ty, &all_orientations(ty)))));
    }
    for n in 2..=5 {
        tasks.push((format!("B{n}=C{n}"), Box::new(move || verify_b_equals_c(n))));
    }
    tasks.push(("sincere B".into(), Box::new(|| verify_sincere_structure(5))));
    tasks.push(("linear A".into(), Box::new(|| verify_linear_a(6))));
    let dir = opts.fixture_dir.clone();
    tasks.push(("fixtures".into(), Box::new(move || Ok(verify_fixtures(&dir)))));

    if opts.suite >= Suite::Full {
        let seed = opts.seed;
        for (s, n) in [
            (Series::A, 5),
            (Series::A, 6),
            (Series::B, 5),
            (Series::B, 6),
            (Series::C, 5),
            (Series::C, 6),
            (Series::D, 5),
            (Series::D, 6),
            (Series::E, 6),
        ] {
            let ty = DynkinType::new(s, n).expect("admissible");
            tasks.push((
                format!("{ty} random orientations"),
                Box::new(move || verify_type(ty, &random_orientations(ty, 10, seed))),
            ));
        }
    }
    if opts.suite >= Suite::Slow {
        for n in [7, 8] {
            let ty = DynkinType::new(Series::E, n).expect("E7/E8");
            tasks.push((format!("{ty} default"), Box::new(move || verify_type(ty, &[OrientationSpec::LinearDefault]))));
        }
    }

    let parts: Vec<VerificationReport> = tasks
        .par_iter()
        .map(|(name, task)| {
            let t = Instant::now();
            let r = task().unwrap_or_else(|e| VerificationReport::single(Check::failure("task.error", name, e)));
            log::info!("{name}: {} in {:.2?}", r.summary(), t.elapsed());
            r
        })
        .collect();

    let mut report = VerificationReport::default();
    report.notes.push(format!("suite {} max_n {} seed {}", opts.suite, opts.max_n, opts.seed));
    for p in parts {
        report.append(p);
    }
    log::info!("suite {} finished in {:.2?}", opts.suite, started.elapsed());
    report
}
