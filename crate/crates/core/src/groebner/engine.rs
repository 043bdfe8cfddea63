//! Buchberger's algorithm over free modules with a position-over-term order.
//!
//! Ideals are rank-one modules. Every element can carry a cofactor vector
//! (indexed by input generator) so that membership certificates fall out of
//! the reduction without a separate lifting step.

use std::cmp::Ordering;

use crate::coeff::Coeff;
use crate::poly::{Monomial, MonomialOrder};

/// One term of a module element: position, monomial, coefficient.
pub(crate) type Term = (u32, Monomial, Coeff);

/// Sparse module vector, terms ascending in the position-over-term order
/// (position 0 is the most significant), so the leading term is last.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct Vector {
    pub terms: Vec<Term>,
}

impl Vector {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.last()
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Elem {
    pub v: Vector,
    /// `v = sum_j cof[j] * generator_j` where position `j` of `cof` is the
    /// generator index.
    pub cof: Option<Vector>,
}

#[derive(Clone, Debug)]
pub(crate) struct Engine {
    pub order: MonomialOrder,
    /// Buchberger's coprime criterion only holds for ideals.
    pub rank_one: bool,
}

impl Engine {
    pub fn cmp_term(&self, a: (u32, &Monomial), b: (u32, &Monomial)) -> Ordering {
        match b.0.cmp(&a.0) {
            Ordering::Equal => self.order.cmp(a.1, b.1),
            o => o,
        }
    }

    pub fn normalize(&self, mut terms: Vec<Term>) -> Vector {
        terms.sort_by(|a, b| self.cmp_term((a.0, &a.1), (b.0, &b.1)));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.0 == t.0 && last.1 == t.1 => last.2 = &last.2 + &t.2,
                _ => out.push(t),
            }
            if out.last().is_some_and(|l| l.2.is_zero()) {
                out.pop();
            }
        }
        // a zero sum followed by the same key cannot occur after sorting
        Vector { terms: out }
    }

    /// `f - c * m * g`.
    pub fn sub_mul(&self, f: &Vector, c: &Coeff, m: &Monomial, g: &Vector) -> Vector {
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let a = &f.terms;
        let (mut i, mut j) = (0, 0);
        let mut gj: Option<Term> = g.terms.first().map(|t| (t.0, t.1.mul(m), &t.2 * c));
        while i < a.len() {
            let Some(b) = gj.as_ref() else { break };
            match self.cmp_term((a[i].0, &a[i].1), (b.0, &b.1)) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b.0, b.1.clone(), -&b.2));
                    j += 1;
                    gj = g.terms.get(j).map(|t| (t.0, t.1.mul(m), &t.2 * c));
                }
                Ordering::Equal => {
                    let s = &a[i].2 - &b.2;
                    if !s.is_zero() {
                        out.push((a[i].0, a[i].1.clone(), s));
                    }
                    i += 1;
                    j += 1;
                    gj = g.terms.get(j).map(|t| (t.0, t.1.mul(m), &t.2 * c));
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        if let Some(b) = gj {
            out.push((b.0, b.1, -&b.2));
            for t in &g.terms[j + 1..] {
                out.push((t.0, t.1.mul(m), -&(&t.2 * c)));
            }
        }
        Vector { terms: out }
    }

    pub fn scale(&self, f: &Vector, c: &Coeff) -> Vector {
        Vector {
            terms: f
                .terms
                .iter()
                .map(|t| (t.0, t.1.clone(), &t.2 * c))
                .collect(),
        }
    }

    fn make_monic(&self, e: Elem) -> Elem {
        let lc = match e.v.lead() {
            Some(t) if !t.2.is_one() => t.2.inv().expect("nonzero"),
            _ => return e,
        };
        Elem {
            v: self.scale(&e.v, &lc),
            cof: e.cof.map(|c| self.scale(&c, &lc)),
        }
    }

    fn sub_mul_elem(&self, f: &Elem, c: &Coeff, m: &Monomial, g: &Elem) -> Elem {
        let v = self.sub_mul(&f.v, c, m, &g.v);
        let cof = match (&f.cof, &g.cof) {
            (Some(fc), Some(gc)) => Some(self.sub_mul(fc, c, m, gc)),
            (Some(fc), None) => Some(fc.clone()),
            _ => None,
        };
        Elem { v, cof }
    }

    fn find_reducer<'a>(&self, lead: &Term, basis: &'a [Elem]) -> Option<(&'a Elem, Monomial)> {
        basis.iter().find_map(|g| {
            let gl = g.v.lead()?;
            if gl.0 != lead.0 {
                return None;
            }
            gl.1.divide_into(&lead.1).map(|q| (g, q))
        })
    }

    /// Full reduction. Keeps the cofactor invariant of `f` when the basis
    /// elements carry cofactors.
    pub fn reduce(&self, f: Elem, basis: &[Elem]) -> Elem {
        let mut p = f;
        let mut rem: Vec<Term> = Vec::new();
        while let Some(lead) = p.v.lead().cloned() {
            match self.find_reducer(&lead, basis) {
                Some((g, q)) => {
                    let lc = &g.v.lead().expect("nonzero").2;
                    let c = &lead.2 * &lc.inv().expect("nonzero");
                    p = self.sub_mul_elem(&p, &c, &q, g);
                }
                None => {
                    let t = p.v.terms.pop().expect("nonempty");
                    rem.push(t);
                }
            }
        }
        rem.reverse();
        Elem {
            v: Vector { terms: rem },
            cof: p.cof,
        }
    }

    fn spoly(&self, f: &Elem, g: &Elem, lcm: &Monomial) -> Elem {
        let fl = f.v.lead().expect("nonzero");
        let gl = g.v.lead().expect("nonzero");
        let mf = fl.1.divide_into(lcm).expect("lcm");
        let mg = gl.1.divide_into(lcm).expect("lcm");
        let cf = fl.2.inv().expect("nonzero");
        let cg = gl.2.inv().expect("nonzero");
        let zero = Elem {
            v: Vector::default(),
            cof: f.cof.as_ref().map(|_| Vector::default()),
        };
        let a = self.sub_mul_elem(&zero, &(-&cf), &mf, f);
        self.sub_mul_elem(&a, &cg, &mg, g)
    }

    /// Reduced Groebner basis of the submodule generated by `gens`.
    /// Output is sorted ascending by leading term and every element is monic.
    pub fn groebner(&self, gens: Vec<Elem>) -> Vec<Elem> {
        let mut polys: Vec<Elem> = Vec::new();
        let mut basis: Vec<usize> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();

        for g in gens {
            if g.v.is_zero() {
                continue;
            }
            let current: Vec<Elem> = basis.iter().map(|&i| polys[i].clone()).collect();
            let h = self.reduce(g, &current);
            if h.v.is_zero() {
                continue;
            }
            polys.push(self.make_monic(h));
            self.update(&polys, &mut basis, &mut pairs, polys.len() - 1);
        }

        while !pairs.is_empty() {
            let k = self.select_pair(&pairs);
            let pair = pairs.swap_remove(k);
            let s = self.spoly(&polys[pair.i], &polys[pair.j], &pair.lcm);
            let current: Vec<Elem> = basis.iter().map(|&i| polys[i].clone()).collect();
            let h = self.reduce(s, &current);
            if h.v.is_zero() {
                continue;
            }
            polys.push(self.make_monic(h));
            self.update(&polys, &mut basis, &mut pairs, polys.len() - 1);
        }

        let mut g: Vec<Elem> = basis.into_iter().map(|i| polys[i].clone()).collect();
        g = self.interreduce(g);
        g
    }

    fn select_pair(&self, pairs: &[Pair]) -> usize {
        let mut best = 0;
        for (k, p) in pairs.iter().enumerate().skip(1) {
            let b = &pairs[best];
            let o = self
                .cmp_term((p.pos, &p.lcm), (b.pos, &b.lcm))
                .then_with(|| (p.i, p.j).cmp(&(b.i, b.j)).reverse());
            if o == Ordering::Less {
                best = k;
            }
        }
        best
    }

    /// Gebauer-Moeller installation of the new element `h` (index into `polys`).
    fn update(&self, polys: &[Elem], basis: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
        let hl = polys[h].v.lead().expect("nonzero").clone();
        let lead = |i: usize| polys[i].v.lead().expect("nonzero");

        let candidates: Vec<(usize, Monomial, bool)> = basis
            .iter()
            .copied()
            .filter(|&g| lead(g).0 == hl.0)
            .map(|g| {
                let gl = lead(g);
                (g, hl.1.lcm(&gl.1), self.rank_one && hl.1.coprime(&gl.1))
            })
            .collect();

        // Keep (h, g1) if coprime or no other candidate's lcm properly divides it.
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (idx, (g1, l1, coprime)) in candidates.iter().enumerate() {
            let dominated = candidates.iter().enumerate().any(|(jdx, (_, l2, _))| {
                if jdx == idx || !l2.divides(l1) {
                    return false;
                }
                // ties between equal lcms: keep the first one only
                l2 != l1 || jdx < idx
            });
            if *coprime || !dominated {
                kept.push((*g1, l1.clone(), *coprime));
            }
        }
        // Drop kept pairs whose lcm equals that of a coprime pair.
        let coprime_lcms: Vec<Monomial> = kept
            .iter()
            .filter(|(_, _, c)| *c)
            .map(|(_, l, _)| l.clone())
            .collect();
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(_, l, c)| !*c && !coprime_lcms.contains(l))
            .map(|(g, lcm, _)| Pair {
                i: g,
                j: h,
                pos: hl.0,
                lcm,
            })
            .collect();

        pairs.retain(|p| {
            if p.pos != hl.0 || !hl.1.divides(&p.lcm) {
                return true;
            }
            let li = lead(p.i).1.lcm(&hl.1);
            let lj = lead(p.j).1.lcm(&hl.1);
            li == p.lcm || lj == p.lcm
        });
        pairs.extend(new_pairs);

        basis.retain(|&g| {
            let gl = lead(g);
            !(gl.0 == hl.0 && hl.1.divides(&gl.1))
        });
        basis.push(h);
    }

    fn interreduce(&self, g: Vec<Elem>) -> Vec<Elem> {
        // minimal basis: drop elements whose lead is divisible by another lead
        let mut minimal: Vec<Elem> = Vec::new();
        for (i, e) in g.iter().enumerate() {
            let el = e.v.lead().expect("nonzero");
            let redundant = g.iter().enumerate().any(|(j, o)| {
                if i == j {
                    return false;
                }
                let ol = o.v.lead().expect("nonzero");
                ol.0 == el.0 && ol.1.divides(&el.1) && (ol.1 != el.1 || j < i)
            });
            if !redundant {
                minimal.push(e.clone());
            }
        }
        let mut out = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let others: Vec<Elem> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, e)| e.clone())
                .collect();
            let r = self.reduce(minimal[i].clone(), &others);
            out.push(self.make_monic(r));
        }
        out.sort_by(|a, b| {
            let al = a.v.lead().expect("nonzero");
            let bl = b.v.lead().expect("nonzero");
            self.cmp_term((al.0, &al.1), (bl.0, &bl.1))
        });
        out
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    pos: u32,
    lcm: Monomial,
}
