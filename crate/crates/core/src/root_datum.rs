//! Valued Dynkin diagrams, orientations and the root lattice.
//!
//! Vertices are 0-based everywhere in the library; the 1-based labels used in
//! printed output and in orientation specs are converted at the boundary.
//!
//! Cartan entries follow `s_i(α_j) = α_j - A[i][j]·α_i`. With that convention
//! `B_n` carries `A[n][n-1] = -2` (1-based), so its `n`-th simple root is the
//! short one and the projective `P(n)` of the linear orientation is thin.
//! `C_n` is the transpose.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub const ALL: [Series; 7] = [
        Series::A,
        Series::B,
        Series::C,
        Series::D,
        Series::E,
        Series::F,
        Series::G,
    ];
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
            Series::E => "E",
            Series::F => "F",
            Series::G => "G",
        };
        f.write_str(c)
    }
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Series::A),
            "B" => Ok(Series::B),
            "C" => Ok(Series::C),
            "D" => Ok(Series::D),
            "E" => Ok(Series::E),
            "F" => Ok(Series::F),
            "G" => Ok(Series::G),
            _ => Err(Error::UnknownSeries(s.to_string())),
        }
    }
}

/// A Dynkin type `X_n` with an admissible rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DynkinType {
    series: Series,
    rank: usize,
}

impl DynkinType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A | Series::B => rank >= 1,
            Series::C | Series::D => rank >= 2,
            Series::E => (3..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(DynkinType { series, rank })
        } else {
            Err(Error::InadmissibleRank { series, rank })
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The canonical valued diagram, with the vertex numbering used by the
    /// linear orientation: a chain `1 - 2 - ...` whose extra vertices hang
    /// off its far end. Conventional identifications (`D_2`, `D_3`, `E_3`,
    /// `E_4`, `E_5`, `B_1`) come out of this construction directly.
    pub fn shape(&self) -> DiagramShape {
        let n = self.rank;
        let mut edges = Vec::new();
        let simple = |i: usize, j: usize| Edge {
            i,
            j,
            a_ij: 1,
            a_ji: 1,
        };
        match self.series {
            Series::A => edges.extend((1..n).map(|j| simple(j - 1, j))),
            Series::B | Series::C => {
                edges.extend((1..n.saturating_sub(1)).map(|j| simple(j - 1, j)));
                if n >= 2 {
                    let (a_ij, a_ji) = if self.series == Series::B { (1, 2) } else { (2, 1) };
                    edges.push(Edge {
                        i: n - 2,
                        j: n - 1,
                        a_ij,
                        a_ji,
                    });
                }
            }
            Series::D => {
                // chain 0..n-2, two leaves n-2 and n-1 attached to vertex n-3
                edges.extend((1..n - 2).map(|j| simple(j - 1, j)));
                if n >= 3 {
                    edges.push(simple(n - 3, n - 2));
                    edges.push(simple(n - 3, n - 1));
                }
            }
            Series::E => {
                // chain 0..n-3 ending in the branch vertex n-4; short arm n-3,
                // two-vertex arm n-2 - n-1
                edges.extend((1..n - 3).map(|j| simple(j - 1, j)));
                if n >= 4 {
                    edges.push(simple(n - 4, n - 3));
                    edges.push(simple(n - 4, n - 2));
                }
                edges.push(simple(n - 2, n - 1));
            }
            Series::F => {
                edges.push(simple(0, 1));
                edges.push(Edge {
                    i: 1,
                    j: 2,
                    a_ij: 1,
                    a_ji: 2,
                });
                edges.push(simple(2, 3));
            }
            Series::G => edges.push(Edge {
                i: 0,
                j: 1,
                a_ij: 1,
                a_ji: 3,
            }),
        }
        DiagramShape::new(n, edges).expect("built-in Dynkin diagrams are valid")
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

/// A valued edge `i - j` with `i < j`; `a_ij`, `a_ji` are the magnitudes of
/// the (negative) off-diagonal Cartan entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub a_ij: i64,
    pub a_ji: i64,
}

/// Underlying valued graph: a forest of Dynkin diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramShape {
    vertex_count: usize,
    edges: Vec<Edge>,
    components: Vec<Vec<usize>>,
}

impl DiagramShape {
    pub fn new(vertex_count: usize, mut edges: Vec<Edge>) -> Result<Self> {
        for e in &mut edges {
            if e.i > e.j {
                std::mem::swap(&mut e.i, &mut e.j);
                std::mem::swap(&mut e.a_ij, &mut e.a_ji);
            }
            if e.i == e.j || e.j >= vertex_count {
                return Err(Error::ArrowMismatch(format!(
                    "edge {}-{} is not between two distinct vertices",
                    e.i + 1,
                    e.j + 1
                )));
            }
            if e.a_ij < 1 || e.a_ji < 1 || !(1..=3).contains(&(e.a_ij * e.a_ji)) {
                return Err(Error::NotDynkin(format!(
                    "edge {}-{} has valuation ({}, {})",
                    e.i + 1,
                    e.j + 1,
                    e.a_ij,
                    e.a_ji
                )));
            }
        }
        edges.sort();
        edges.dedup_by(|a, b| a.i == b.i && a.j == b.j);

        // union-find for components; a repeated join means a cycle
        let mut parent: Vec<usize> = (0..vertex_count).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for e in &edges {
            let (a, b) = (find(&mut parent, e.i), find(&mut parent, e.j));
            if a == b {
                return Err(Error::NotDynkin(format!(
                    "edge {}-{} closes a cycle",
                    e.i + 1,
                    e.j + 1
                )));
            }
            parent[a.max(b)] = a.min(b);
        }
        let mut components: Vec<Vec<usize>> = Vec::new();
        let mut root_slot = vec![usize::MAX; vertex_count];
        for v in 0..vertex_count {
            let r = find(&mut parent, v);
            if root_slot[r] == usize::MAX {
                root_slot[r] = components.len();
                components.push(Vec::new());
            }
            components[root_slot[r]].push(v);
        }
        Ok(DiagramShape {
            vertex_count,
            edges,
            components,
        })
    }

    /// Places `other` after `self`, shifting its vertex labels.
    pub fn disjoint_union(&self, other: &DiagramShape) -> DiagramShape {
        let shift = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge {
            i: e.i + shift,
            j: e.j + shift,
            ..*e
        }));
        DiagramShape::new(shift + other.vertex_count, edges).expect("union of forests is a forest")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() <= 1
    }

    /// Every acyclic orientation of the forest: one arrow per edge, both
    /// directions allowed. Ordered by the bit pattern over `edges()`.
    pub fn all_orientations(&self) -> Vec<Vec<Arrow>> {
        let m = self.edges.len();
        (0u64..1 << m)
            .map(|bits| self.orientation_from_bits(bits))
            .collect()
    }

    /// Bit `k` set means edge `k` points from its smaller to its larger vertex.
    pub fn orientation_from_bits(&self, bits: u64) -> Vec<Arrow> {
        self.edges
            .iter()
            .enumerate()
            .map(|(k, e)| {
                if bits >> k & 1 == 1 {
                    Arrow { from: e.i, to: e.j }
                } else {
                    Arrow { from: e.j, to: e.i }
                }
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
}

/// How to orient the diagram.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum OrientationSpec {
    /// Every edge points toward the smaller vertex label, so vertex 1 is a
    /// sink and the identity is a sink ordering.
    #[default]
    LinearDefault,
    Explicit(Vec<Arrow>),
}

impl FromStr for OrientationSpec {
    type Err = Error;

    /// `default`, or comma-separated 1-based arrows `from>to`, e.g. `2>1,2>3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("default") || s.eq_ignore_ascii_case("linear") {
            return Ok(OrientationSpec::LinearDefault);
        }
        let bad = || Error::BadOrientationSpec(s.to_string());
        let mut arrows = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (a, b) = part.split_once('>').ok_or_else(bad)?;
            let from: usize = a.trim().parse().map_err(|_| bad())?;
            let to: usize = b.trim().parse().map_err(|_| bad())?;
            if from == 0 || to == 0 {
                return Err(bad());
            }
            arrows.push(Arrow {
                from: from - 1,
                to: to - 1,
            });
        }
        Ok(OrientationSpec::Explicit(arrows))
    }
}

impl fmt::Display for OrientationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrientationSpec::LinearDefault => f.write_str("default"),
            OrientationSpec::Explicit(arrows) => {
                let parts: Vec<String> = arrows
                    .iter()
                    .map(|a| format!("{}>{}", a.from + 1, a.to + 1))
                    .collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}

/// Coefficients over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        RootVector(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A valued quiver of finite type together with its Cartan data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    label: String,
    shape: DiagramShape,
    arrows: Vec<Arrow>,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
}

const ROOT_CAP: usize = 10_000;

pub fn build_cartan(ty: DynkinType, spec: &OrientationSpec) -> Result<CartanDatum> {
    CartanDatum::from_shape(ty.to_string(), ty.shape(), spec)
}

impl CartanDatum {
    pub fn from_shape(
        label: impl Into<String>,
        shape: DiagramShape,
        spec: &OrientationSpec,
    ) -> Result<Self> {
        let n = shape.vertex_count();
        let arrows = match spec {
            OrientationSpec::LinearDefault => shape
                .edges()
                .iter()
                .map(|e| Arrow { from: e.j, to: e.i })
                .collect(),
            OrientationSpec::Explicit(arrows) => {
                let mut seen = vec![false; shape.edges().len()];
                for a in arrows {
                    let (lo, hi) = (a.from.min(a.to), a.from.max(a.to));
                    let k = shape
                        .edges()
                        .iter()
                        .position(|e| e.i == lo && e.j == hi)
                        .ok_or_else(|| {
                            Error::ArrowMismatch(format!(
                                "{}>{} is not an edge",
                                a.from + 1,
                                a.to + 1
                            ))
                        })?;
                    if std::mem::replace(&mut seen[k], true) {
                        return Err(Error::ArrowMismatch(format!(
                            "edge {}-{} oriented twice",
                            lo + 1,
                            hi + 1
                        )));
                    }
                }
                if let Some(k) = seen.iter().position(|s| !s) {
                    let e = shape.edges()[k];
                    return Err(Error::ArrowMismatch(format!(
                        "edge {}-{} has no arrow",
                        e.i + 1,
                        e.j + 1
                    )));
                }
                arrows.clone()
            }
        };

        let mut cartan = vec![vec![0i64; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for e in shape.edges() {
            cartan[e.i][e.j] = -e.a_ij;
            cartan[e.j][e.i] = -e.a_ji;
        }
        let symmetrizer = symmetrize(&shape, &cartan);

        let datum = CartanDatum {
            label: label.into(),
            shape,
            arrows,
            cartan,
            symmetrizer,
        };
        datum.sink_order()?;
        Ok(datum)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.shape.vertex_count()
    }

    pub fn shape(&self) -> &DiagramShape {
        &self.shape
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// `diag(d)·A`.
    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        self.cartan
            .iter()
            .zip(&self.symmetrizer)
            .map(|(row, &d)| row.iter().map(|&a| a * d).collect())
            .collect()
    }

    /// A vertex ordering in which every arrow goes from a later vertex to an
    /// earlier one. Ties are broken by the smallest label.
    pub fn sink_order(&self) -> Result<Vec<usize>> {
        let n = self.rank();
        let mut out_degree = vec![0usize; n];
        let mut incoming: Vec<Vec<usize>> = vec![Vec::new(); n];
        for a in &self.arrows {
            out_degree[a.from] += 1;
            incoming[a.to].push(a.from);
        }
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let v = (0..n)
                .find(|&v| !placed[v] && out_degree[v] == 0)
                .ok_or(Error::CyclicOrientation)?;
            placed[v] = true;
            order.push(v);
            for &u in &incoming[v] {
                out_degree[u] -= 1;
            }
        }
        Ok(order)
    }

    /// `s_i(x)`: only coordinate `i` changes, to `-x_i - Σ_{j≠i} A[i][j]·x_j`.
    pub fn simple_reflection(&self, i: usize, x: &RootVector) -> RootVector {
        let mut out = x.clone();
        self.reflect_in_place(i, &mut out.0);
        out
    }

    pub(crate) fn reflect_in_place(&self, i: usize, x: &mut [i64]) {
        let row = &self.cartan[i];
        let mut acc = -x[i];
        for (j, (&a, &xj)) in row.iter().zip(x.iter()).enumerate() {
            if j != i {
                acc -= a * xj;
            }
        }
        x[i] = acc;
    }

    /// Closure of the simple roots under simple reflections, restricted to
    /// the positive cone. Sorted by height, then lexicographically.
    pub fn positive_roots(&self) -> Result<Vec<RootVector>> {
        let n = self.rank();
        let mut seen: BTreeSet<RootVector> = BTreeSet::new();
        let mut queue: VecDeque<RootVector> = VecDeque::new();
        for i in 0..n {
            let r = RootVector::simple(n, i);
            seen.insert(r.clone());
            queue.push_back(r);
        }
        while let Some(r) = queue.pop_front() {
            for i in 0..n {
                let s = self.simple_reflection(i, &r);
                if s.is_positive() && !seen.contains(&s) {
                    if seen.len() >= ROOT_CAP {
                        return Err(Error::NotFiniteType(ROOT_CAP));
                    }
                    seen.insert(s.clone());
                    queue.push_back(s);
                }
            }
        }
        let mut roots: Vec<RootVector> = seen.into_iter().collect();
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        Ok(roots)
    }

    /// Sylvester's criterion on `diag(d)·A`, with exact Bareiss elimination.
    pub fn is_positive_definite(&self) -> bool {
        let m = self.symmetrized();
        (1..=m.len()).all(|k| {
            let minor: Vec<Vec<i64>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
            bareiss_det(minor) > 0
        })
    }
}

fn symmetrize(shape: &DiagramShape, cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = shape.vertex_count();
    let mut d = vec![0i64; n];
    for comp in shape.components() {
        let root = comp[0];
        d[root] = 1;
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            for e in shape.edges() {
                let j = if e.i == i {
                    e.j
                } else if e.j == i {
                    e.i
                } else {
                    continue;
                };
                if d[j] != 0 {
                    continue;
                }
                // d_i·A_ij = d_j·A_ji
                let (aij, aji) = (cartan[i][j], cartan[j][i]);
                let num = d[i] * aij;
                if num % aji != 0 {
                    let scale = aji.abs();
                    for &v in comp {
                        d[v] *= scale;
                    }
                }
                d[j] = d[i] * aij / aji;
                stack.push(j);
            }
        }
        let g = comp.iter().fold(0i64, |g, &v| gcd(g, d[v]));
        for &v in comp {
            d[v] /= g;
        }
    }
    d
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn bareiss_det(mut m: Vec<Vec<i64>>) -> i64 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i64;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(series: Series, n: usize) -> CartanDatum {
        build_cartan(DynkinType::new(series, n).unwrap(), &OrientationSpec::LinearDefault).unwrap()
    }

    #[test]
    fn a2_matrix_and_arrow() {
        let d = datum(Series::A, 2);
        assert_eq!(d.cartan(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(d.arrows(), &[Arrow { from: 1, to: 0 }]);
    }

    #[test]
    fn b2_has_product_two() {
        let d = datum(Series::B, 2);
        assert_eq!(d.cartan()[0][1] * d.cartan()[1][0], 2);
        // short root at vertex 2
        assert_eq!(d.cartan()[1][0], -2);
    }

    #[test]
    fn d2_is_two_isolated_vertices() {
        let d = datum(Series::D, 2);
        assert_eq!(d.cartan(), &[vec![2, 0], vec![0, 2]]);
        assert_eq!(d.shape().components().len(), 2);
    }

    #[test]
    fn inadmissible_ranks() {
        assert!(DynkinType::new(Series::A, 0).is_err());
        assert!(DynkinType::new(Series::C, 1).is_err());
        assert!(DynkinType::new(Series::D, 1).is_err());
        assert!(DynkinType::new(Series::E, 9).is_err());
        assert!(DynkinType::new(Series::E, 2).is_err());
        assert!(DynkinType::new(Series::F, 5).is_err());
        assert!(DynkinType::new(Series::G, 3).is_err());
    }

    #[test]
    fn conventional_identifications() {
        let cmp = |a: (Series, usize), b: (Series, usize)| {
            let x = datum(a.0, a.1).positive_roots().unwrap().len();
            let y = datum(b.0, b.1).positive_roots().unwrap().len();
            assert_eq!(x, y, "{a:?} vs {b:?}");
        };
        cmp((Series::B, 1), (Series::A, 1));
        cmp((Series::D, 3), (Series::A, 3));
        cmp((Series::E, 4), (Series::A, 4));
        cmp((Series::E, 5), (Series::D, 5));
        let e3 = datum(Series::E, 3);
        assert_eq!(e3.shape().components().len(), 2);
        assert_eq!(e3.positive_roots().unwrap().len(), 3 + 1);
    }

    #[test]
    fn sink_orders() {
        assert_eq!(datum(Series::A, 3).sink_order().unwrap(), vec![0, 1, 2]);
        assert_eq!(datum(Series::D, 4).sink_order().unwrap(), vec![0, 1, 2, 3]);
        let spec: OrientationSpec = "1>2,3>2".parse().unwrap();
        let d = build_cartan(DynkinType::new(Series::A, 3).unwrap(), &spec).unwrap();
        assert_eq!(d.sink_order().unwrap(), vec![1, 0, 2]);
    }

    #[test]
    fn orientation_errors() {
        let a3 = DynkinType::new(Series::A, 3).unwrap();
        let not_edge: OrientationSpec = "1>3,2>1".parse().unwrap();
        assert!(matches!(
            build_cartan(a3, &not_edge),
            Err(Error::ArrowMismatch(_))
        ));
        let missing: OrientationSpec = "2>1".parse().unwrap();
        assert!(matches!(
            build_cartan(a3, &missing),
            Err(Error::ArrowMismatch(_))
        ));
        let twice: OrientationSpec = "2>1,1>2,3>2".parse().unwrap();
        assert!(matches!(
            build_cartan(a3, &twice),
            Err(Error::ArrowMismatch(_))
        ));
        assert!("2-1".parse::<OrientationSpec>().is_err());
        assert!("0>1".parse::<OrientationSpec>().is_err());
    }

    #[test]
    fn reflections() {
        let a2 = datum(Series::A, 2);
        assert_eq!(
            a2.simple_reflection(0, &RootVector(vec![1, 0])),
            RootVector(vec![-1, 0])
        );
        assert_eq!(
            a2.simple_reflection(0, &RootVector(vec![0, 1])),
            RootVector(vec![1, 1])
        );
        // A12 = -2, A21 = -1 is C2 in this crate's convention
        let c2 = datum(Series::C, 2);
        assert_eq!(c2.cartan()[0][1], -2);
        assert_eq!(
            c2.simple_reflection(0, &RootVector(vec![0, 1])),
            RootVector(vec![2, 1])
        );
        assert_eq!(c2.positive_roots().unwrap().len(), 4);
    }

    #[test]
    fn root_counts() {
        let expected = [
            (Series::A, 1, 1),
            (Series::A, 2, 3),
            (Series::A, 7, 28),
            (Series::B, 3, 9),
            (Series::C, 5, 25),
            (Series::D, 4, 12),
            (Series::D, 6, 30),
            (Series::E, 6, 36),
            (Series::E, 7, 63),
            (Series::E, 8, 120),
            (Series::F, 4, 24),
            (Series::G, 2, 6),
        ];
        for (s, n, count) in expected {
            assert_eq!(datum(s, n).positive_roots().unwrap().len(), count, "{s}{n}");
        }
    }

    #[test]
    fn b_and_c_are_transposes() {
        for n in 2..=8 {
            let b = datum(Series::B, n);
            let c = datum(Series::C, n);
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(b.cartan()[i][j], c.cartan()[j][i]);
                }
            }
        }
    }

    #[test]
    fn symmetrizer_and_definiteness() {
        for s in Series::ALL {
            for n in 1..=8 {
                let Ok(ty) = DynkinType::new(s, n) else { continue };
                let d = build_cartan(ty, &OrientationSpec::LinearDefault).unwrap();
                let m = d.symmetrized();
                for (i, row) in m.iter().enumerate() {
                    for (j, &x) in row.iter().enumerate() {
                        assert_eq!(x, m[j][i], "{ty}");
                    }
                }
                assert!(d.symmetrizer().iter().all(|&x| x > 0));
                assert!(d.is_positive_definite(), "{ty}");
            }
        }
    }

    #[test]
    fn affine_cycle_rejected() {
        let edges = vec![
            Edge { i: 0, j: 1, a_ij: 1, a_ji: 1 },
            Edge { i: 1, j: 2, a_ij: 1, a_ji: 1 },
            Edge { i: 0, j: 2, a_ij: 1, a_ji: 1 },
        ];
        assert!(DiagramShape::new(3, edges).is_err());
        let g2_affine = vec![Edge { i: 0, j: 1, a_ij: 2, a_ji: 2 }];
        assert!(DiagramShape::new(2, g2_affine).is_err());
    }

    #[test]
    fn orientation_spec_round_trip() {
        let spec: OrientationSpec = "2>1, 3>2".parse().unwrap();
        assert_eq!(spec.to_string(), "2>1,3>2");
        assert_eq!("default".parse::<OrientationSpec>().unwrap(), OrientationSpec::LinearDefault);
    }
}
