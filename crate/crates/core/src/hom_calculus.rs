//! Hom and Ext non-vanishing between indecomposables, decided from supports.
//!
//! `Hom(M(i,u), M(j,v)) ≅ Hom(P(i), M(j,v-u))` for `u ≤ v`, which is nonzero
//! iff `i` lies in the support of `M(j,v-u)`; for `u > v` it vanishes.
//! Ext comes from the AR formula `Ext(X,Y) ≅ D Hom(Y, τX)`.

use rayon::prelude::*;

use crate::ar_orbits::ModCategory;

/// Dense square bit-matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    size: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(size: usize) -> Self {
        let words = size.div_ceil(64).max(1);
        BitMatrix {
            size,
            words,
            bits: vec![0; size * words],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.words + col / 64] >> (col % 64) & 1 == 1
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        let w = &mut self.bits[row * self.words + col / 64];
        if value {
            *w |= 1 << (col % 64);
        } else {
            *w &= !(1 << (col % 64));
        }
    }

    pub fn row(&self, row: usize) -> &[u64] {
        &self.bits[row * self.words..(row + 1) * self.words]
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// `Hom(M(i,u), M(j,v)) ≠ 0`.
pub fn hom_nonzero(cat: &ModCategory, x: (usize, usize), y: (usize, usize)) -> bool {
    let (i, u) = x;
    let (j, v) = y;
    if u > v {
        return false;
    }
    cat.indec(j, v - u)
        .is_some_and(|m| m.support().contains(i))
}

/// `Ext(M(i,u), M(j,v)) ≠ 0`.
pub fn ext_nonzero(cat: &ModCategory, x: (usize, usize), y: (usize, usize)) -> bool {
    let (i, u) = x;
    if u == 0 {
        return false;
    }
    hom_nonzero(cat, y, (i, u - 1))
}

/// Fills `cat.hom` and `cat.ext` from the two predicates.
pub fn build_matrices(cat: &mut ModCategory) {
    let m = cat.len();
    let keys: Vec<(usize, usize)> = cat.indecs().iter().map(|x| (x.vertex, x.power)).collect();
    let rows: Vec<(Vec<bool>, Vec<bool>)> = (0..m)
        .into_par_iter()
        .map(|a| {
            let hom = keys.iter().map(|&y| hom_nonzero(cat, keys[a], y)).collect();
            let ext = keys.iter().map(|&y| ext_nonzero(cat, keys[a], y)).collect();
            (hom, ext)
        })
        .collect();
    let mut hom = BitMatrix::new(m);
    let mut ext = BitMatrix::new(m);
    for (a, (h, e)) in rows.into_iter().enumerate() {
        for b in 0..m {
            hom.set(a, b, h[b]);
            ext.set(a, b, e[b]);
        }
    }
    cat.hom = hom;
    cat.ext = ext;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ar_orbits::knit_category;
    use crate::root_datum::{build_cartan, DynkinType, OrientationSpec, Series};

    fn all_categories() -> Vec<ModCategory> {
        let mut out = Vec::new();
        for s in Series::ALL {
            for n in 1..=8 {
                let Ok(ty) = DynkinType::new(s, n) else { continue };
                let d = build_cartan(ty, &OrientationSpec::LinearDefault).unwrap();
                out.push(knit_category(&d).unwrap());
            }
        }
        out
    }

    fn a2() -> ModCategory {
        let d = build_cartan(
            DynkinType::new(Series::A, 2).unwrap(),
            &OrientationSpec::LinearDefault,
        )
        .unwrap();
        knit_category(&d).unwrap()
    }

    #[test]
    fn a2_hom_by_hand() {
        let c = a2();
        assert!(hom_nonzero(&c, (0, 0), (0, 0)));
        // Hom(S1, S2) = 0
        assert!(!hom_nonzero(&c, (0, 0), (0, 1)));
        // P1 ⊂ P2
        assert!(hom_nonzero(&c, (0, 0), (1, 0)));
        // P2 → I2 = S2
        assert!(hom_nonzero(&c, (1, 0), (0, 1)));
        assert_eq!(c.hom().count_ones(), 5);
    }

    #[test]
    fn a2_ext_by_hand() {
        let c = a2();
        // 0 → S1 → P2 → S2 → 0
        assert!(ext_nonzero(&c, (0, 1), (0, 0)));
        assert!(!ext_nonzero(&c, (0, 0), (0, 1)));
        assert_eq!(c.ext().count_ones(), 1);
    }

    #[test]
    fn diagonal_hom_true_ext_false() {
        for c in all_categories() {
            for a in 0..c.len() {
                assert!(c.hom().get(a, a));
                assert!(!c.ext().get(a, a), "{}", c.datum().label());
            }
        }
    }

    #[test]
    fn projectives_ext_free_and_hom_triangular() {
        for c in all_categories() {
            let order = c.datum().sink_order().unwrap();
            let pos: Vec<usize> = {
                let mut p = vec![0; order.len()];
                for (k, &v) in order.iter().enumerate() {
                    p[v] = k;
                }
                p
            };
            for i in 0..c.rank() {
                let p = c.projective(i);
                for b in 0..c.len() {
                    assert!(!c.ext().get(p, b));
                }
                for j in 0..c.rank() {
                    let hom = c.hom().get(p, c.projective(j));
                    assert_eq!(hom, c.indecs()[c.projective(j)].support().contains(i));
                    if hom && i != j {
                        assert!(pos[i] < pos[j], "{}", c.datum().label());
                    }
                }
            }
        }
    }

    #[test]
    fn tau_shift_and_slices() {
        for c in all_categories() {
            for x in c.indecs() {
                for y in c.indecs() {
                    let (a, b) = ((x.vertex, x.power), (y.vertex, y.power));
                    if x.power > y.power {
                        assert!(!hom_nonzero(&c, a, b));
                    }
                    let shifted = (c.index_of(x.vertex, x.power + 1), c.index_of(y.vertex, y.power + 1));
                    if let (Some(_), Some(_)) = shifted {
                        assert_eq!(
                            hom_nonzero(&c, a, b),
                            hom_nonzero(&c, (x.vertex, x.power + 1), (y.vertex, y.power + 1))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn non_projectives_are_not_ext_projective() {
        for c in all_categories() {
            for a in 0..c.len() {
                if !c.indecs()[a].is_projective() {
                    assert!((0..c.len()).any(|b| c.ext().get(a, b)));
                }
            }
        }
    }

    #[test]
    fn hom_into_injective_detects_support() {
        for c in all_categories() {
            for (a, x) in c.indecs().iter().enumerate() {
                for j in 0..c.rank() {
                    assert_eq!(c.hom().get(a, c.injective(j)), x.support().contains(j));
                }
            }
        }
    }
}
