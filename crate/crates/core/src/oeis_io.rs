//! Triangles in OEIS-compatible formats, b-file parsing, and reconciliation
//! against checked-in fixtures (or, on request, a live fetch).

use std::fmt::{self, Write as _};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Duration;

use num_traits::One;

use crate::closed_forms::{a_s, binom, catalan_bracket, ExactInt, ShearedTriangle};
use crate::error::{Error, Result};
use crate::root_datum::Series;
use crate::verifier::{Check, VerificationReport};

/// Environment variable naming the fixture directory.
pub const FIXTURE_DIR_ENV: &str = "TILTCOUNT_OEIS_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    /// `a_s(A_n)`, A009766.
    A,
    /// `a_s(B_n) = a_s(C_n)`, A059481.
    B,
    /// `a_s(D_n)`, A241188 (rows from `n = 2`).
    D,
    /// `C(n,k) - C(n,k-1)` for `k ≤ n/2`, A008315. Row `n` is the sheared
    /// row `t = n - 1`.
    ShearedCatalan,
    /// A007318.
    Pascal,
    /// `[t, s]`, A029635.
    Lucas,
    /// `a_n(D_n)` for `n ≥ 2`, A129869.
    DDiagonal,
}

impl TriangleKind {
    pub const ALL: [TriangleKind; 7] = [
        TriangleKind::A,
        TriangleKind::B,
        TriangleKind::D,
        TriangleKind::ShearedCatalan,
        TriangleKind::Pascal,
        TriangleKind::Lucas,
        TriangleKind::DDiagonal,
    ];

    pub fn sequence_id(self) -> &'static str {
        match self {
            TriangleKind::A => "A009766",
            TriangleKind::B => "A059481",
            TriangleKind::D => "A241188",
            TriangleKind::ShearedCatalan => "A008315",
            TriangleKind::Pascal => "A007318",
            TriangleKind::Lucas => "A029635",
            TriangleKind::DDiagonal => "A129869",
        }
    }

    pub fn for_sequence(id: &str) -> Result<Self> {
        let id = normalize_id(id)?;
        TriangleKind::ALL
            .into_iter()
            .find(|k| k.sequence_id() == id)
            .ok_or(Error::UnknownTriangle(id))
    }

    /// First b-file index.
    pub fn offset(self) -> i64 {
        match self {
            TriangleKind::D | TriangleKind::DDiagonal => 2,
            _ => 0,
        }
    }

    fn first_row(self) -> usize {
        match self {
            TriangleKind::D | TriangleKind::DDiagonal => 2,
            _ => 0,
        }
    }

    fn has_sums(self) -> bool {
        matches!(self, TriangleKind::A | TriangleKind::B | TriangleKind::D)
    }

    /// Row `r` (`None` cells are undefined), with the Lucas corner left
    /// undefined unless `oeis` is set.
    fn row(self, r: usize, oeis: bool) -> Vec<Option<ExactInt>> {
        let r64 = r as u64;
        match self {
            TriangleKind::A => (0..=r).map(|s| a_s(Series::A, r, s).ok()).collect(),
            TriangleKind::B => (0..=r).map(|s| a_s(Series::B, r, s).ok()).collect(),
            TriangleKind::D => (0..=r).map(|s| a_s(Series::D, r, s).ok()).collect(),
            TriangleKind::ShearedCatalan => (0..=r64 / 2).map(|k| catalan_bracket(r64, k).ok()).collect(),
            TriangleKind::Pascal => (0..=r64).map(|k| Some(binom(r64, k))).collect(),
            TriangleKind::Lucas if r == 0 => {
                vec![oeis.then(|| ExactInt::from(2u32))]
            }
            TriangleKind::Lucas => (0..=r64).map(|k| ShearedTriangle::Lucas.z(r64, k)).collect(),
            TriangleKind::DDiagonal => vec![a_s(Series::D, r, r).ok()],
        }
    }
}

impl FromStr for TriangleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" | "catalan-triangle" => Ok(TriangleKind::A),
            "b" | "c" => Ok(TriangleKind::B),
            "d" => Ok(TriangleKind::D),
            "sheared-catalan" | "ballot" => Ok(TriangleKind::ShearedCatalan),
            "pascal" => Ok(TriangleKind::Pascal),
            "lucas" => Ok(TriangleKind::Lucas),
            "d-diagonal" | "d-diag" => Ok(TriangleKind::DDiagonal),
            other => TriangleKind::for_sequence(other).map_err(|_| Error::UnknownTriangle(s.to_string())),
        }
    }
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriangleKind::A => "A",
            TriangleKind::B => "B",
            TriangleKind::D => "D",
            TriangleKind::ShearedCatalan => "sheared-catalan",
            TriangleKind::Pascal => "pascal",
            TriangleKind::Lucas => "lucas",
            TriangleKind::DDiagonal => "d-diagonal",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Pretty,
    Csv,
    BFile,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pretty" => Ok(Format::Pretty),
            "csv" => Ok(Format::Csv),
            "bfile" | "b-file" => Ok(Format::BFile),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Pretty => "pretty",
            Format::Csv => "csv",
            Format::BFile => "bfile",
        })
    }
}

/// A rendered triangle: rows `0..=max_row`, undefined cells as `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleDoc {
    pub kind: TriangleKind,
    pub rows: Vec<Vec<Option<ExactInt>>>,
    pub sums: Vec<Option<ExactInt>>,
    pub offset: i64,
    /// Rows were built with the OEIS corner convention.
    pub oeis: bool,
}

impl TriangleDoc {
    pub fn build(kind: TriangleKind, max_row: usize, oeis: bool) -> Self {
        let rows: Vec<Vec<Option<ExactInt>>> = (0..=max_row).map(|r| kind.row(r, oeis)).collect();
        let sums = rows
            .iter()
            .map(|row| row.iter().cloned().sum::<Option<ExactInt>>())
            .collect();
        TriangleDoc {
            kind,
            rows,
            sums,
            offset: kind.offset(),
            oeis,
        }
    }

    /// Defined values in reading order, skipping rows before the first
    /// defined row.
    pub fn terms(&self) -> Vec<ExactInt> {
        self.rows
            .iter()
            .skip(self.kind.first_row())
            .flat_map(|row| row.iter().flatten().cloned())
            .collect()
    }
}

const MAX_ROWS: usize = 1000;

/// Renders rows `0..=max_row`.
pub fn render_triangle(kind: TriangleKind, max_row: usize, format: Format) -> Result<String> {
    if max_row > MAX_ROWS {
        return Err(Error::OutOfRange(format!("at most {MAX_ROWS} rows, got {max_row}")));
    }
    let doc = TriangleDoc::build(kind, max_row, format == Format::BFile);
    Ok(match format {
        Format::Pretty => render_pretty(&doc),
        Format::Csv => render_csv(&doc),
        Format::BFile => render_bfile(&doc),
    })
}

fn cell(v: &Option<ExactInt>) -> String {
    v.as_ref().map_or_else(|| "·".to_string(), ExactInt::to_string)
}

fn render_pretty(doc: &TriangleDoc) -> String {
    let width = doc
        .rows
        .iter()
        .flatten()
        .map(|v| cell(v).chars().count())
        .max()
        .unwrap_or(1);
    let cols = doc.rows.iter().map(Vec::len).max().unwrap_or(0);
    let sum_width = doc.sums.iter().map(|v| cell(v).chars().count()).max().unwrap_or(1);
    let label_width = (doc.rows.len().saturating_sub(1)).to_string().len();
    let mut out = String::new();
    for (r, row) in doc.rows.iter().enumerate() {
        let mut line = format!("{r:>label_width$} |");
        for k in 0..cols {
            match row.get(k) {
                Some(v) => write!(line, " {:>width$}", cell(v)).unwrap(),
                None => line.push_str(&" ".repeat(width + 1)),
            }
        }
        if doc.kind.has_sums() {
            write!(line, " | {:>sum_width$}", cell(&doc.sums[r])).unwrap();
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn render_csv(doc: &TriangleDoc) -> String {
    let mut out = String::new();
    for row in doc.rows.iter().skip(doc.kind.first_row()) {
        let cells: Vec<String> = row.iter().flatten().map(ExactInt::to_string).collect();
        if !cells.is_empty() {
            out.push_str(&cells.join(","));
            out.push('\n');
        }
    }
    out
}

fn render_bfile(doc: &TriangleDoc) -> String {
    let mut out = format!("# {} ({}), read by rows\n", doc.kind.sequence_id(), doc.kind);
    if doc.kind == TriangleKind::Lucas && doc.oeis {
        out.push_str("# corner entry 2 follows the OEIS convention; the bracket [0,0] is undefined\n");
    }
    for (k, v) in doc.terms().iter().enumerate() {
        writeln!(out, "{} {}", doc.offset + k as i64, v).unwrap();
    }
    out
}

/// A parsed b-file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    pub id: String,
    pub entries: Vec<(i64, ExactInt)>,
}

impl BFile {
    /// Parses `index value` lines; `#` comments and blank lines are skipped.
    /// `path` is only used in error messages.
    pub fn parse(id: &str, text: &str, path: &Path) -> Result<Self> {
        let mut entries: Vec<(i64, ExactInt)> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let malformed = || Error::MalformedBFile {
                path: path.to_path_buf(),
                line: lineno + 1,
                text: line.to_string(),
            };
            let mut parts = trimmed.split_whitespace();
            let (Some(i), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(malformed());
            };
            let index: i64 = i.parse().map_err(|_| malformed())?;
            let value: ExactInt = v.parse().map_err(|_| malformed())?;
            if let Some(&(prev, _)) = entries.last() {
                if index != prev + 1 {
                    return Err(malformed());
                }
            }
            entries.push((index, value));
        }
        Ok(BFile {
            id: id.to_string(),
            entries,
        })
    }

    pub fn offset(&self) -> Option<i64> {
        self.entries.first().map(|e| e.0)
    }

    pub fn values(&self) -> Vec<ExactInt> {
        self.entries.iter().map(|e| e.1.clone()).collect()
    }
}

fn normalize_id(id: &str) -> Result<String> {
    let digits = id.trim().trim_start_matches(['A', 'a']);
    if digits.is_empty() || digits.len() > 6 || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(Error::UnknownTriangle(id.to_string()));
    }
    Ok(format!("A{digits:0>6}"))
}

/// Default fixture directory: `$TILTCOUNT_OEIS_DIR`, else the fixtures
/// shipped with this crate.
pub fn default_fixture_dir() -> PathBuf {
    std::env::var_os(FIXTURE_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
}

pub fn fixture_path(dir: &Path, id: &str) -> Result<PathBuf> {
    let id = normalize_id(id)?;
    Ok(dir.join(format!("b{}.txt", &id[1..])))
}

pub fn read_fixture(dir: &Path, id: &str) -> Result<BFile> {
    let path = fixture_path(dir, id)?;
    let text = std::fs::read_to_string(&path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => Error::MissingFixture(id.to_string(), dir.to_path_buf()),
        _ => Error::Io(e),
    })?;
    BFile::parse(&normalize_id(id)?, &text, &path)
}

fn fetch_online(id: &str) -> Result<BFile> {
    let url = format!("https://oeis.org/{id}/b{}.txt", &id[1..]);
    let agent: ureq::Agent = ureq::Agent::config_builder()
        .timeout_global(Some(Duration::from_secs(20)))
        .build()
        .into();
    let text = agent
        .get(&url)
        .call()
        .map_err(|e| Error::Fetch(format!("{url}: {e}")))?
        .body_mut()
        .read_to_string()
        .map_err(|e| Error::Fetch(format!("{url}: {e}")))?;
    BFile::parse(id, &text, Path::new(&url))
}

/// Reads the fixture, or with `online` tries oeis.org first and falls back
/// to the fixture with a warning.
pub fn fetch_bfile(id: &str, dir: &Path, online: bool) -> Result<BFile> {
    let id = normalize_id(id)?;
    if online {
        match fetch_online(&id) {
            Ok(b) => return Ok(b),
            Err(e) => log::warn!("{e}; falling back to the local fixture"),
        }
    }
    read_fixture(dir, &id)
}

/// The first `terms` values of `kind`'s sequence, in OEIS reading order.
pub fn sequence_terms(kind: TriangleKind, terms: usize) -> Vec<ExactInt> {
    let mut out = Vec::with_capacity(terms);
    let mut r = kind.first_row();
    while out.len() < terms && r <= MAX_ROWS {
        out.extend(kind.row(r, true).into_iter().flatten());
        r += 1;
    }
    out.truncate(terms);
    out
}

/// Compares the first `terms` generated values with `bfile`.
pub fn reconcile(kind: TriangleKind, bfile: &BFile, terms: usize) -> VerificationReport {
    let mut report = VerificationReport::default();
    let subject = format!("{} vs {}", kind, bfile.id);
    report.push(Check::compare(
        "oeis.offset",
        &subject,
        kind.offset(),
        bfile.offset().map_or("none".to_string(), |o| o.to_string()),
    ));
    let generated = sequence_terms(kind, terms);
    let fixture = bfile.values();
    let mismatch = (0..terms).find(|&k| generated.get(k) != fixture.get(k));
    let actual = match mismatch {
        None => format!("{terms} terms equal"),
        Some(k) => format!(
            "index {}: generated {} b-file {}",
            kind.offset() + k as i64,
            generated.get(k).map_or("-".into(), ExactInt::to_string),
            fixture.get(k).map_or("-".into(), ExactInt::to_string),
        ),
    };
    report.push(Check::compare(
        "oeis.prefix",
        &subject,
        format!("{terms} terms equal"),
        actual,
    ));
    report
}

/// `[t, s]` with the OEIS corner convention.
pub fn lucas_oeis(t: u64, s: u64) -> Option<ExactInt> {
    if t == 0 && s == 0 {
        Some(ExactInt::one() + ExactInt::one())
    } else {
        ShearedTriangle::Lucas.z(t, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixtures() -> PathBuf {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
    }

    #[test]
    fn b_csv_row_nine() {
        let csv = render_triangle(TriangleKind::B, 10, Format::Csv).unwrap();
        assert_eq!(
            csv.lines().nth(9).unwrap(),
            "1,9,45,165,495,1287,3003,6435,12870,24310"
        );
    }

    #[test]
    fn d_diagonal_terms() {
        let t: Vec<String> = sequence_terms(TriangleKind::DDiagonal, 8)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(t, ["1", "5", "20", "77", "294", "1122", "4290", "16445"]);
    }

    #[test]
    fn pretty_sums_and_dots() {
        let a = render_triangle(TriangleKind::A, 9, Format::Pretty).unwrap();
        assert!(a.lines().nth(9).unwrap().ends_with("| 16796"));
        let d = render_triangle(TriangleKind::D, 9, Format::Pretty).unwrap();
        let lines: Vec<&str> = d.lines().collect();
        assert!(lines[0].contains('·') && lines[1].contains('·'));
        assert!(lines[9].ends_with("| 35750"));
        assert!(lines[6].contains(" 294 ") && lines[6].ends_with("|   672"));
        let b = render_triangle(TriangleKind::B, 9, Format::Pretty).unwrap();
        assert!(b.lines().nth(9).unwrap().ends_with("| 48620"));
    }

    #[test]
    fn bfile_round_trip() {
        for kind in TriangleKind::ALL {
            let text = render_triangle(kind, 12, Format::BFile).unwrap();
            let parsed = BFile::parse(kind.sequence_id(), &text, Path::new("mem")).unwrap();
            assert_eq!(parsed.values(), TriangleDoc::build(kind, 12, true).terms());
            assert_eq!(parsed.offset(), Some(kind.offset()));
        }
    }

    #[test]
    fn lucas_corner_only_in_oeis_mode() {
        let csv = render_triangle(TriangleKind::Lucas, 2, Format::Csv).unwrap();
        assert_eq!(csv, "1,2\n1,3,2\n");
        let b = render_triangle(TriangleKind::Lucas, 1, Format::BFile).unwrap();
        assert!(b.contains("# corner"));
        assert!(b.contains("\n0 2\n1 1\n2 2\n"));
        assert_eq!(lucas_oeis(0, 0), Some(ExactInt::from(2u32)));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = BFile::parse("A000001", "# c\n0 1\n\nabc def\n", Path::new("x.txt")).unwrap_err();
        match err {
            Error::MalformedBFile { line, text, .. } => assert_eq!((line, text.as_str()), (4, "abc def")),
            e => panic!("{e}"),
        }
        assert!(BFile::parse("A000001", "0 1\n2 3\n", Path::new("x")).is_err());
        assert!(BFile::parse("A000001", "0 -1\n", Path::new("x")).is_err());
    }

    #[test]
    fn fixtures_reconcile() {
        for (kind, terms) in [
            (TriangleKind::A, 55),
            (TriangleKind::B, 55),
            (TriangleKind::D, 52),
            (TriangleKind::ShearedCatalan, 40),
            (TriangleKind::Pascal, 55),
            (TriangleKind::Lucas, 40),
            (TriangleKind::DDiagonal, 8),
        ] {
            let b = read_fixture(&fixtures(), kind.sequence_id()).unwrap();
            assert_eq!(b.entries.len(), terms);
            let r = reconcile(kind, &b, terms);
            assert!(r.passed(), "{}", r.to_text());
        }
        let first = read_fixture(&fixtures(), "A009766").unwrap();
        assert_eq!(first.entries[0], (0, ExactInt::one()));
    }

    #[test]
    fn ids() {
        assert_eq!(TriangleKind::for_sequence("a8315").unwrap(), TriangleKind::ShearedCatalan);
        assert_eq!("lucas".parse::<TriangleKind>().unwrap(), TriangleKind::Lucas);
        assert!("Q".parse::<TriangleKind>().is_err());
        assert!(matches!(read_fixture(&fixtures(), "A000045"), Err(Error::MissingFixture(..))));
    }
}
