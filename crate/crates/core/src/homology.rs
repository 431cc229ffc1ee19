//! Homology of the Verma-module complexes and of their graded pieces.
//!
//! Every dimension here is a rank computation over `ℚ(i)` on a finite graded
//! piece. Nothing is inferred from spectral sequences.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::contact::named_element;
use crate::enveloping::PbwMonomial;
use crate::error::{Error, Result};
use crate::linalg::{self, Echelon, SparseVec};
use crate::morphisms::{delta_minus, delta_plus, LinearMap, Morphism, MorphismKind};
use crate::scalar::Gq;
use crate::verma::{act, graded_basis, key_weight, ModuleCoords, Quadrant, VMono, VermaVector};

type Key = (ModuleCoords, PbwMonomial, VMono);

/// Assigns column indices to basis keys on first sight.
#[derive(Default)]
struct Indexer(HashMap<Key, usize>);

impl Indexer {
    fn vec(&mut self, v: &VermaVector) -> SparseVec {
        let m = v.module;
        let entries: Vec<(usize, Gq)> = v
            .terms()
            .map(|((u, f), c)| {
                let n = self.0.len();
                (*self.0.entry((m, *u, *f)).or_insert(n), c.clone())
            })
            .collect();
        linalg::sparse_from(entries)
    }

    fn rank(&mut self, vs: &[VermaVector]) -> usize {
        let rows: Vec<SparseVec> = vs.iter().map(|v| self.vec(v)).collect();
        linalg::rank(&rows)
    }
}

fn coords(q: Quadrant, m: i32, n: i32) -> Option<ModuleCoords> {
    ModuleCoords::new(q, m, n).ok()
}

/// A node of the complexes together with the maps entering and leaving it.
#[derive(Clone, Debug)]
pub struct ComplexNode {
    pub module: ModuleCoords,
    pub incoming: Option<Morphism>,
    pub outgoing: Option<Morphism>,
}

/// The map leaving `module` in the complexes.
pub fn outgoing_kind(module: ModuleCoords) -> Option<MorphismKind> {
    use MorphismKind::*;
    let (m, n) = (module.m, module.n);
    match module.quadrant {
        Quadrant::A => match (m, n) {
            (0, 0) => None,
            (1, 0) => Some(Nabla3Tilde),
            (0, 1) => Some(Nabla3),
            (_, 0) => Some(Nabla2),
            (0, _) => Some(Nabla2Tilde),
            _ => Some(Nabla),
        },
        Quadrant::B => Some(if n == 0 { Nabla2 } else { Nabla }),
        Quadrant::C => Some(Nabla),
        Quadrant::D => Some(if m == 0 { Nabla2Tilde } else { Nabla }),
    }
}

/// The map entering `module` and its source.
pub fn incoming_source(module: ModuleCoords) -> Option<(MorphismKind, ModuleCoords)> {
    use MorphismKind::*;
    use Quadrant::*;
    let (m, n) = (module.m, module.n);
    let pick = |k, q, a, b| coords(q, a, b).map(|c| (k, c));
    match module.quadrant {
        A => pick(Nabla, A, m + 1, n + 1),
        B if m < 0 => pick(Nabla, B, m + 1, n + 1),
        B => pick(Nabla2Tilde, A, 0, n + 2),
        C => match (m, n) {
            (0, 0) => None,
            (-1, 0) => pick(Nabla3, A, 0, 1),
            (0, -1) => pick(Nabla3Tilde, A, 1, 0),
            (_, 0) => pick(Nabla2, B, m + 2, 0),
            (0, _) => pick(Nabla2Tilde, D, 0, n + 2),
            _ => pick(Nabla, C, m + 1, n + 1),
        },
        D if n < 0 => pick(Nabla, D, m + 1, n + 1),
        D => pick(Nabla2, A, m + 2, 0),
    }
}

impl ComplexNode {
    pub fn new(module: ModuleCoords) -> Result<Self> {
        let outgoing = outgoing_kind(module).map(|k| Morphism::new(k, module)).transpose()?;
        let incoming = incoming_source(module).map(|(k, s)| Morphism::new(k, s)).transpose()?;
        if let Some(i) = &incoming {
            if i.target() != module {
                return Err(Error::InvalidMorphism(format!("{} from {} lands in {}", i.kind, i.source(), i.target())));
            }
        }
        Ok(ComplexNode { module, incoming, outgoing })
    }

    /// Images of the incoming map that land in degree `d`.
    fn incoming_images(&self, d: u32) -> Vec<VermaVector> {
        let Some(inc) = &self.incoming else { return Vec::new() };
        let s = inc.kind.degree_shift();
        if d < s {
            return Vec::new();
        }
        graded_basis(inc.source(), d - s).iter().map(|v| inc.apply(v).expect("source matches")).collect()
    }
}

/// Homology of one node in one degree, split by `(h_x, h_y)` weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeHomology {
    pub degree: u32,
    pub dim: usize,
    pub by_weight: BTreeMap<(i64, i64), usize>,
}

fn weight_of(v: &VermaVector) -> Result<(i64, i64)> {
    let mut it = v.terms().map(|((u, f), _)| key_weight(&v.module, u, f));
    let w = it.next().unwrap_or((0, 0));
    if it.any(|x| x != w) {
        return Err(Error::Inhomogeneous(format!("mixed weights in {v}")));
    }
    Ok(w)
}

fn group_by_weight(vs: Vec<VermaVector>) -> Result<BTreeMap<(i64, i64), Vec<VermaVector>>> {
    let mut out: BTreeMap<(i64, i64), Vec<VermaVector>> = BTreeMap::new();
    for v in vs {
        if !v.is_zero() {
            out.entry(weight_of(&v)?).or_default().push(v);
        }
    }
    Ok(out)
}

/// Weight spaces of the homology in degree `d`, each given by
/// `(basis, outgoing images, incoming images)`.
struct DegreeData {
    basis: BTreeMap<(i64, i64), Vec<VermaVector>>,
    incoming: BTreeMap<(i64, i64), Vec<VermaVector>>,
}

fn degree_data(node: &ComplexNode, d: u32) -> Result<DegreeData> {
    let basis = group_by_weight(graded_basis(node.module, d))?;
    let images = node.incoming_images(d);
    if let Some(out) = &node.outgoing {
        for v in &images {
            if !out.apply(v)?.is_zero() {
                return Err(Error::NonzeroComposition(format!("{} degree {d}", node.module)));
            }
        }
    }
    Ok(DegreeData { basis, incoming: group_by_weight(images)? })
}

/// `dim ker(outgoing) − rank(incoming)` in degree `d`, weight by weight.
pub fn degree_homology(node: &ComplexNode, d: u32) -> Result<DegreeHomology> {
    let data = degree_data(node, d)?;
    let mut by_weight = BTreeMap::new();
    for (w, basis) in &data.basis {
        let mut ix = Indexer::default();
        let out_rank = match &node.outgoing {
            Some(o) => {
                let imgs = basis.iter().map(|v| o.apply(v)).collect::<Result<Vec<_>>>()?;
                ix.rank(&imgs)
            }
            None => 0,
        };
        let in_rank = data.incoming.get(w).map(|v| ix.rank(v)).unwrap_or(0);
        let h = basis.len() - out_rank - in_rank;
        if h > 0 {
            by_weight.insert(*w, h);
        }
    }
    Ok(DegreeHomology { degree: d, dim: by_weight.values().sum(), by_weight })
}

/// Homology of `node` in degrees `0..=max_degree`.
pub fn homology_dims(node: &ComplexNode, max_degree: u32) -> Result<Vec<DegreeHomology>> {
    (0..=max_degree).into_par_iter().map(|d| degree_homology(node, d)).collect()
}

/// Representatives of a basis of the homology in degree `d`.
pub fn homology_classes(node: &ComplexNode, d: u32) -> Result<Vec<VermaVector>> {
    let data = degree_data(node, d)?;
    let mut reps = Vec::new();
    for (w, basis) in &data.basis {
        let mut ix = Indexer::default();
        let cycles: Vec<VermaVector> = match &node.outgoing {
            Some(o) => {
                let imgs = basis.iter().map(|v| o.apply(v)).collect::<Result<Vec<_>>>()?;
                let rows: Vec<SparseVec> = imgs.iter().map(|v| ix.vec(v)).collect();
                linalg::kernel(&rows)
                    .into_iter()
                    .map(|rel| rel.into_iter().fold(VermaVector::zero(node.module), |acc, (j, c)| acc.add(&basis[j].scale(&c))))
                    .collect()
            }
            None => basis.clone(),
        };
        let mut ech = Echelon::new();
        for v in data.incoming.get(w).into_iter().flatten() {
            ech.insert(ix.vec(v));
        }
        for c in cycles {
            if ech.insert(ix.vec(&c)).is_none() {
                reps.push(c);
            }
        }
    }
    Ok(reps)
}

/// Eigenvalue of `t` on `v`, if `v` is an eigenvector.
pub fn t_eigenvalue(v: &VermaVector) -> Option<Gq> {
    let tv = act(&named_element("t").ok()?, v);
    let ((u, f), c) = v.terms().next()?;
    let lambda = tv.coeff(u, f).checked_div(c).ok()?;
    (tv == v.scale(&lambda)).then_some(lambda)
}

/// All nodes with `|m|, |n| ≤ range`, every quadrant, in a fixed order.
pub fn window_nodes(range: i32) -> Vec<ModuleCoords> {
    let mut out = Vec::new();
    for q in Quadrant::ALL {
        for m in -range..=range {
            for n in -range..=range {
                if let Some(c) = coords(q, m, n) {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// The two nodes with nonzero homology.
pub fn is_exceptional(module: ModuleCoords) -> bool {
    matches!((module.quadrant, module.m, module.n), (Quadrant::A, 0, 0) | (Quadrant::C, -1, -1))
}

/// One row of a homology sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub module: ModuleCoords,
    pub degree: u32,
    pub dim: usize,
}

/// Homology of every node with `|m|, |n| ≤ range` in degrees `≤ window`.
pub fn homology_sweep(range: i32, window: u32) -> Result<Vec<SweepRow>> {
    let nodes = window_nodes(range);
    let per_node: Vec<Result<Vec<SweepRow>>> = nodes
        .par_iter()
        .map(|m| {
            let node = ComplexNode::new(*m)?;
            Ok((0..=window)
                .map(|d| degree_homology(&node, d).map(|h| SweepRow { module: *m, degree: d, dim: h.dim }))
                .collect::<Result<Vec<_>>>()?)
        })
        .collect();
    let mut rows = Vec::new();
    for r in per_node {
        rows.extend(r?);
    }
    Ok(rows)
}

// ---------------------------------------------------------------------------
// Graded complexes

/// Which graded complex to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrFamily {
    /// `G_X = Λ(𝔤₋₁) ⊗ V_X`.
    G,
    /// `G_X°`: kernel (A, B) or cokernel (C, D) of `∇₂` on the axis `n = 0`.
    GCirc,
}

/// Signed `y₁`, `y₂` degrees of a monomial.
fn y_degrees(q: Quadrant, f: &VMono) -> (i32, i32) {
    let s = if q.y_dual() { -1 } else { 1 };
    (s * f[2] as i32, s * f[3] as i32)
}

fn subsets(bits: [u8; 2], k: i32) -> Vec<u8> {
    match k {
        0 => vec![0],
        1 => vec![bits[0], bits[1]],
        2 => vec![bits[0] | bits[1]],
        _ => Vec::new(),
    }
}

const PLUS: [u8; 2] = [1, 2];
const MINUS: [u8; 2] = [4, 8];

/// Basis of `G_X(a,b)^{m,n}`, or of all of `G_X^{m,n}` when `sector` is `None`.
pub fn gr_basis(q: Quadrant, sector: Option<(i32, i32)>, m: i32, n: i32) -> Vec<VermaVector> {
    let Some(module) = coords(q, m, n) else { return Vec::new() };
    let mut out = Vec::new();
    for f in module.v_basis() {
        let (p, qq) = y_degrees(q, &f);
        let pairs: Vec<(i32, i32)> = match sector {
            Some((a, b)) => vec![(a - p, b - qq)],
            None => (0..=2).flat_map(|i| (0..=2).map(move |j| (i, j))).collect(),
        };
        for (i, j) in pairs {
            for fp in subsets(PLUS, i) {
                for fm in subsets(MINUS, j) {
                    out.push(VermaVector::term(module, Gq::from_int(1), PbwMonomial::new(0, fp | fm), f));
                }
            }
        }
    }
    out
}

fn gr_apply(kind: MorphismKind, v: &VermaVector) -> Option<VermaVector> {
    let m = Morphism::new(kind, v.module).ok()?;
    Some(m.map.apply_with(v, true).expect("source matches"))
}

/// A chain space `span / quotient`.
struct Chain {
    span: Vec<VermaVector>,
    quotient: Vec<VermaVector>,
}

fn gr_chain(family: GrFamily, q: Quadrant, sector: Option<(i32, i32)>, m: i32, n: i32) -> Chain {
    let base = gr_basis(q, sector, m, n);
    let mut chain = Chain { span: base, quotient: Vec::new() };
    if family == GrFamily::G || n != 0 || chain.span.is_empty() {
        return chain;
    }
    match q {
        Quadrant::A | Quadrant::B => {
            let imgs: Vec<Option<VermaVector>> = chain.span.iter().map(|v| gr_apply(MorphismKind::Nabla2, v)).collect();
            if imgs.iter().all(|x| x.is_none()) {
                return chain;
            }
            let mut ix = Indexer::default();
            let rows: Vec<SparseVec> = imgs.iter().map(|v| v.as_ref().map(|v| ix.vec(v)).unwrap_or_default()).collect();
            let span = linalg::kernel(&rows)
                .into_iter()
                .map(|rel| rel.into_iter().fold(VermaVector::zero(chain.span[0].module), |acc, (j, c)| acc.add(&chain.span[j].scale(&c))))
                .collect();
            chain.span = span;
        }
        Quadrant::C | Quadrant::D => {
            let src = if q == Quadrant::D { Quadrant::A } else { Quadrant::B };
            let src_sector = sector.map(|(a, b)| (a - 1, b - 1));
            chain.quotient = gr_basis(src, src_sector, m + 2, 0).iter().filter_map(|v| gr_apply(MorphismKind::Nabla2, v)).filter(|v| !v.is_zero()).collect();
        }
    }
    chain
}

/// `dim H^{m,n}` of `G_X` or `G_X°`, restricted to the sector `(a,b)` if given.
pub fn gr_homology(family: GrFamily, q: Quadrant, sector: Option<(i32, i32)>, m: i32, n: i32) -> usize {
    let here = gr_chain(family, q, sector, m, n);
    if here.span.is_empty() {
        return 0;
    }
    let next = gr_chain(family, q, sector, m - 1, n - 1);
    let prev = gr_chain(family, q, sector, m + 1, n + 1);
    let mut ix = Indexer::default();
    let dim_span = ix.rank(&here.span);
    // {s : ∇s ∈ next.quotient}
    let outs: Vec<VermaVector> = here.span.iter().filter_map(|v| gr_apply(MorphismKind::Nabla, v)).collect();
    let q_next = ix.rank(&next.quotient);
    let mut both = outs;
    both.extend(next.quotient.iter().cloned());
    let out_rank = ix.rank(&both) - q_next;
    // ∇(prev) + here.quotient
    let mut ins: Vec<VermaVector> = prev.span.iter().filter_map(|v| gr_apply(MorphismKind::Nabla, v)).collect();
    ins.extend(here.quotient.iter().cloned());
    let in_rank = ix.rank(&ins);
    dim_span - out_rank - in_rank
}

/// Which ladder of `Δ⁺` maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ladder {
    /// `Δ⁻(Λ₊^k Λ₋^b [x₁,x₂])`, `0 ≤ k ≤ a`.
    S,
    /// `Δ⁻(Λ₊^k Λ₋^{b−1} [∂x₁,∂x₂])`, `a ≤ k ≤ 2`.
    T,
}

fn ladder_piece(ladder: Ladder, k: i32, b: i32, s: i32) -> Vec<VermaVector> {
    let (q, j) = match ladder {
        Ladder::S => (Quadrant::A, b),
        Ladder::T => (Quadrant::C, b - 1),
    };
    let Some(src) = coords(q, s, 0) else { return Vec::new() };
    let Ok(dm) = LinearMap::new(src, delta_minus()) else { return Vec::new() };
    let mut out = Vec::new();
    for fp in subsets(PLUS, k) {
        for fm in subsets(MINUS, j) {
            for f in src.v_basis() {
                let v = VermaVector::term(src, Gq::from_int(1), PbwMonomial::new(0, fp | fm), f);
                let img = dm.apply_with(&v, true).expect("source matches");
                if !img.is_zero() {
                    out.push(img);
                }
            }
        }
    }
    out
}

fn apply_delta_plus(vs: &[VermaVector]) -> Vec<VermaVector> {
    vs.iter()
        .filter_map(|v| LinearMap::new(v.module, delta_plus()).ok().map(|d| d.apply_with(v, true).expect("source matches")))
        .collect()
}

/// Homology at position `k` of a ladder, per source `x`-degree up to `max_deg`.
pub fn ladder_homology(ladder: Ladder, b: i32, k: i32, max_deg: u32) -> BTreeMap<u32, usize> {
    let sign = if ladder == Ladder::S { 1 } else { -1 };
    let mut out = BTreeMap::new();
    for deg in 0..=max_deg as i32 {
        let s = sign * deg;
        let here = ladder_piece(ladder, k, b, s);
        let prev = ladder_piece(ladder, k - 1, b, s + 1);
        let mut ix = Indexer::default();
        let dim = ix.rank(&here);
        let out_rank = ix.rank(&apply_delta_plus(&here));
        let in_rank = ix.rank(&apply_delta_plus(&prev));
        let h = dim - out_rank - in_rank;
        if h > 0 {
            out.insert(deg as u32, h);
        }
    }
    out
}

/// Values stated in closed form, used as the reference for sweeps.
pub mod expected {
    use crate::verma::Quadrant;

    /// `dim Λʲ` of a two-dimensional space.
    pub fn wedge(j: i32) -> usize {
        match j {
            0 | 2 => 1,
            1 => 2,
            _ => 0,
        }
    }

    fn in_012(a: i32) -> bool {
        (0..=2).contains(&a)
    }

    /// `dim H^{m,n}(G_X°(a,b))` for `X ∈ {A, C, D}`.
    pub fn g_circ(q: Quadrant, a: i32, b: i32, m: i32, n: i32) -> Option<usize> {
        let (lo, hi) = (a.min(b), a.max(b));
        let v = match q {
            Quadrant::A => {
                if a < 0 || b < 0 {
                    0
                } else if a > 2 || b > 2 {
                    if m == 0 && n >= hi { wedge(a + b - n) } else { 0 }
                } else if m == 0 && n >= hi {
                    wedge(a + b - n)
                } else if m == 1 && (0..=lo).contains(&n) {
                    wedge(a + b - n + 1)
                } else {
                    0
                }
            }
            Quadrant::D => {
                if a > 2 || b > 2 {
                    0
                } else if a < 0 || b < 0 {
                    if m == 0 && n <= lo { wedge(a + b - n) } else { 0 }
                } else if m == 0 && n <= 0 {
                    wedge(a + b - n)
                } else {
                    0
                }
            }
            Quadrant::C => {
                if a > 2 || b > 2 {
                    0
                } else if a < 0 || b < 0 {
                    if m == 0 && n <= lo - 2 { wedge(a + b - n - 2) } else { 0 }
                } else if m == 0 && n <= lo - 2 {
                    wedge(a + b - n - 2)
                } else if m == -1 && hi - 2 <= n && n <= 0 {
                    wedge(a + b - n - 3)
                } else {
                    0
                }
            }
            Quadrant::B => return None,
        };
        Some(v)
    }

    /// `dim H^{m,n}(G_X(a,b))`, where it is stated (outside `{0,1,2}²` the
    /// two complexes coincide).
    pub fn g_plain(q: Quadrant, a: i32, b: i32, m: i32, n: i32) -> Option<usize> {
        if in_012(a) && in_012(b) {
            return None;
        }
        g_circ(q, a, b, m, n)
    }

    /// Total `dim H^{m,n}(G_X°)`, from the `𝔤₀`-module decomposition.
    pub fn g_circ_total(q: Quadrant, m: i32, n: i32) -> Option<usize> {
        let q_dim = |r: i32, k: i32| if k < 0 { 0 } else { ((r + 1) * (k + 1)) as usize };
        let r = |i: i32| i % 2;
        let sum = |f: &dyn Fn(i32) -> usize| (0..=2).map(f).sum::<usize>();
        Some(match (q, m) {
            (Quadrant::A, 0) if n >= 0 => sum(&|i| q_dim(r(i), n - i)),
            (Quadrant::A, 1) if (0..=1).contains(&n) => sum(&|i| q_dim(r(i), i - n - 1)),
            (Quadrant::D, 0) if n <= 0 => sum(&|i| q_dim(r(i), -n + i)),
            (Quadrant::C, 0) if n <= 0 => sum(&|i| q_dim(r(i), -n - 2 + i)),
            (Quadrant::C, -1) if (-1..=0).contains(&n) => sum(&|i| q_dim(r(i), n + 2 - i - 1)),
            (Quadrant::B, _) => return None,
            _ => 0,
        })
    }

    /// `dim H_k(S(a,b))` for `0 ≤ k ≤ a`.
    pub fn s_ladder(b: i32, k: i32) -> usize {
        wedge(k + 1 + b)
    }

    /// `dim H_k(T(a,b))` for `a ≤ k ≤ 2`.
    pub fn t_ladder(b: i32, k: i32) -> usize {
        if k < 0 { 0 } else { wedge(k + b - 3) }
    }
}
