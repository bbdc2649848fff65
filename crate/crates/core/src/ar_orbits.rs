//! The indecomposables `M(i,u) = τ^{-u}P(i)` as dimension vectors.
//!
//! Everything is computed in the root lattice. For a sink ordering
//! `v_1, …, v_n` the projective at `v_k` is `s_{v_1}⋯s_{v_{k-1}}(α_{v_k})`,
//! and `τ^{-1}` acts on non-injective indecomposables as `s_{v_1}⋯s_{v_n}`
//! (rightmost factor applied first). An orbit ends at the last positive
//! iterate, which is the injective.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hom_calculus::{self, BitMatrix};
use crate::root_datum::{CartanDatum, RootVector};
use crate::vertex_set::VertexSet;

/// One indecomposable module `M(vertex, power)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Indec {
    pub vertex: usize,
    pub power: usize,
    pub dim: RootVector,
    support: VertexSet,
}

impl Indec {
    fn new(vertex: usize, power: usize, dim: RootVector) -> Self {
        let support = dim.support().into_iter().collect();
        Indec {
            vertex,
            power,
            dim,
            support,
        }
    }

    pub fn support(&self) -> VertexSet {
        self.support
    }

    pub fn is_projective(&self) -> bool {
        self.power == 0
    }
}

pub fn support(ind: &Indec) -> VertexSet {
    ind.support()
}

/// `mod Λ` for one valued quiver: the indecomposables sorted by `(i,u)`,
/// orbit lengths, and the Hom/Ext non-vanishing matrices.
#[derive(Clone, Debug)]
pub struct ModCategory {
    datum: CartanDatum,
    indecs: Vec<Indec>,
    q: Vec<usize>,
    offsets: Vec<usize>,
    injective_at: Vec<usize>,
    pub(crate) hom: BitMatrix,
    pub(crate) ext: BitMatrix,
}

pub fn knit_category(datum: &CartanDatum) -> Result<ModCategory> {
    let n = datum.rank();
    let order = datum.sink_order()?;

    let apply_all = |x: &mut [i64], seq: &[usize]| {
        for &v in seq.iter().rev() {
            datum.reflect_in_place(v, x);
        }
    };

    let mut projective = vec![RootVector(vec![]); n];
    let mut injective = vec![RootVector(vec![]); n];
    for (k, &v) in order.iter().enumerate() {
        let mut x = RootVector::simple(n, v);
        apply_all(&mut x.0, &order[..k]);
        projective[v] = x;

        let mut y = RootVector::simple(n, v);
        let tail: Vec<usize> = order[k + 1..].iter().rev().copied().collect();
        apply_all(&mut y.0, &tail);
        injective[v] = y;
    }

    let mut indecs = Vec::new();
    let mut q = vec![0; n];
    let mut offsets = vec![0; n];
    let root_count = datum.positive_roots()?.len();
    for i in 0..n {
        offsets[i] = indecs.len();
        let mut x = projective[i].clone();
        assert!(x.is_positive(), "projective at vertex {} is not positive", i + 1);
        let mut u = 0;
        loop {
            indecs.push(Indec::new(i, u, x.clone()));
            apply_all(&mut x.0, &order);
            if !x.is_positive() {
                break;
            }
            u += 1;
            if indecs.len() > root_count {
                return Err(Error::NotFiniteType(root_count));
            }
        }
        q[i] = u;
    }

    // match each orbit endpoint to the injective hull of a simple
    let mut injective_at = vec![usize::MAX; n];
    for i in 0..n {
        let end = offsets[i] + q[i];
        let j = injective
            .iter()
            .position(|d| *d == indecs[end].dim)
            .expect("orbit endpoint is an injective");
        injective_at[j] = end;
    }

    let m = indecs.len();
    let mut cat = ModCategory {
        datum: datum.clone(),
        indecs,
        q,
        offsets,
        injective_at,
        hom: BitMatrix::new(m),
        ext: BitMatrix::new(m),
    };
    hom_calculus::build_matrices(&mut cat);
    Ok(cat)
}

impl ModCategory {
    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn indecs(&self) -> &[Indec] {
        &self.indecs
    }

    pub fn len(&self) -> usize {
        self.indecs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indecs.is_empty()
    }

    /// Orbit lengths: `M(i, q(i))` is injective.
    pub fn q(&self) -> &[usize] {
        &self.q
    }

    pub fn index_of(&self, vertex: usize, power: usize) -> Option<usize> {
        (vertex < self.q.len() && power <= self.q[vertex]).then(|| self.offsets[vertex] + power)
    }

    pub fn indec(&self, vertex: usize, power: usize) -> Option<&Indec> {
        self.index_of(vertex, power).map(|k| &self.indecs[k])
    }

    pub fn projective(&self, vertex: usize) -> usize {
        self.offsets[vertex]
    }

    /// Index of the injective envelope `I(vertex)` of the simple at `vertex`.
    pub fn injective(&self, vertex: usize) -> usize {
        self.injective_at[vertex]
    }

    pub fn is_injective(&self, idx: usize) -> bool {
        let ind = &self.indecs[idx];
        ind.power == self.q[ind.vertex]
    }

    /// The vertex `j` with `idx = I(j)`, if `idx` is injective.
    pub fn injective_vertex(&self, idx: usize) -> Option<usize> {
        self.injective_at.iter().position(|&k| k == idx)
    }

    pub fn hom(&self) -> &BitMatrix {
        &self.hom
    }

    pub fn ext(&self) -> &BitMatrix {
        &self.ext
    }

    pub fn full_support(&self) -> VertexSet {
        VertexSet::full(self.rank())
    }

    /// Plain-text dump, one indecomposable per line:
    /// `<i> <u> <d_1> … <d_n> | <support vertices>`, all labels 1-based.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for ind in &self.indecs {
            let dims: Vec<String> = ind.dim.coords().iter().map(i64::to_string).collect();
            writeln!(
                out,
                "{} {} {} | {}",
                ind.vertex + 1,
                ind.power,
                dims.join(" "),
                ind.support
            )
            .unwrap();
        }
        out
    }
}

/// Indecomposables with full support.
pub fn sincere_indecomposables(cat: &ModCategory) -> Vec<&Indec> {
    let full = cat.full_support();
    cat.indecs().iter().filter(|m| m.support() == full).collect()
}
