//! Exact decompositions: Cartan (K + P), simultaneous root spaces of a
//! commuting family, Iwasawa data (A + N + K), and reductive pairs (H + Q).

use crate::algebra::{KillingConvention, LieAlgebraBasis, LieError};
use crate::rat::{format_q, Q, QMat};
use num_traits::{One, Zero};

/// Which decomposition a [`Decomposition`] value represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionKind {
    Cartan,
    RootSpace,
    Iwasawa,
    ReductiveHQ,
}

/// One summand: named, with basis vectors in algebra coordinates and an
/// optional root tuple (values of the roots on the chosen abelian family).
#[derive(Debug, Clone)]
pub struct Subspace {
    pub name: String,
    pub vectors: Vec<Vec<Q>>,
    pub roots: Option<Vec<Q>>,
}

/// A verified direct-sum decomposition of the algebra's coefficient space.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    pub parts: Vec<Subspace>,
}

impl Decomposition {
    /// Part by name.
    pub fn part(&self, name: &str) -> Option<&Subspace> {
        self.parts.iter().find(|p| p.name == name)
    }

    /// Total dimension of all parts.
    pub fn total_dim(&self) -> usize {
        self.parts.iter().map(|p| p.vectors.len()).sum()
    }

    /// Check that all parts together form a basis of an n-dimensional space.
    pub fn is_direct_sum(&self, n: usize) -> bool {
        if self.total_dim() != n {
            return false;
        }
        let all: Vec<Vec<Q>> = self.parts.iter().flat_map(|p| p.vectors.clone()).collect();
        columns(&all).rank() == n
    }
}

/// Stack coefficient vectors as matrix columns.
pub fn columns(vecs: &[Vec<Q>]) -> QMat {
    let rows = vecs[0].len();
    let mut m = QMat::zeros(rows, vecs.len());
    for (j, v) in vecs.iter().enumerate() {
        assert_eq!(v.len(), rows);
        for (i, x) in v.iter().enumerate() {
            m[(i, j)] = x.clone();
        }
    }
    m
}

/// Matrix-vector product.
pub fn mat_vec(m: &QMat, v: &[Q]) -> Vec<Q> {
    assert_eq!(m.cols(), v.len());
    (0..m.rows())
        .map(|i| {
            let mut s = Q::zero();
            for (j, x) in v.iter().enumerate() {
                if !m[(i, j)].is_zero() && !x.is_zero() {
                    s = s + m[(i, j)].clone() * x;
                }
            }
            s
        })
        .collect()
}

/// Is `v` in the column span of `span` (exact)?
pub fn in_span(span: &QMat, v: &[Q]) -> bool {
    span.solve(v).is_some()
}

/// Cartan decomposition with respect to the involution `theta(X) = -X^t`:
/// parts "K" (fixed) and "P" (anti-fixed). Errors with `NotThetaStable` when
/// the realization is not closed under the involution.
pub fn cartan_decompose(alg: &LieAlgebraBasis) -> Result<Decomposition, LieError> {
    let n = alg.dim();
    let mut theta = QMat::zeros(n, n);
    for j in 0..n {
        let img = -&alg.basis[j].transpose();
        let coords = alg.expand(&img).map_err(|_| LieError::NotThetaStable)?;
        for (i, v) in coords.into_iter().enumerate() {
            theta[(i, j)] = v;
        }
    }
    let id = QMat::identity(n);
    let k = (&theta - &id).null_space();
    let p = (&theta + &id).null_space();
    let dec = Decomposition {
        kind: DecompositionKind::Cartan,
        parts: vec![
            Subspace { name: "K".into(), vectors: k, roots: None },
            Subspace { name: "P".into(), vectors: p, roots: None },
        ],
    };
    if !dec.is_direct_sum(n) {
        return Err(LieError::NotThetaStable);
    }
    Ok(dec)
}

/// Simultaneous root-space decomposition for a commuting family of elements
/// (given as coefficient vectors). Each part is labelled by its root tuple.
/// Errors when the family does not commute or some `ad` action fails to
/// diagonalize over the rationals.
pub fn root_space_decompose(
    alg: &LieAlgebraBasis,
    abelian: &[Vec<Q>],
) -> Result<Decomposition, LieError> {
    let n = alg.dim();
    for i in 0..abelian.len() {
        for j in (i + 1)..abelian.len() {
            if alg.bracket_vec(&abelian[i], &abelian[j]).iter().any(|x| !x.is_zero()) {
                return Err(LieError::NonCommutingAbelian(i, j));
            }
        }
    }
    // start from the whole space; refine by each ad action in turn
    let full: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut v = vec![Q::zero(); n];
            v[i] = Q::one();
            v
        })
        .collect();
    let mut parts: Vec<(Vec<Q>, Vec<Vec<Q>>)> = vec![(Vec::new(), full)];
    for a in abelian {
        let ad = alg.ad_matrix(a);
        let mut next = Vec::new();
        for (roots, vecs) in parts {
            let span = columns(&vecs);
            let m = vecs.len();
            // restriction of ad to the (invariant) subspace
            let mut restr = QMat::zeros(m, m);
            for (j, v) in vecs.iter().enumerate() {
                let w = mat_vec(&ad, v);
                let c = span.solve(&w).ok_or(LieError::NotRationallyDiagonalizable)?;
                for (i, x) in c.into_iter().enumerate() {
                    restr[(i, j)] = x;
                }
            }
            let eigs = restr
                .rational_eigenvalues()
                .ok_or(LieError::NotRationallyDiagonalizable)?;
            let mut uniq: Vec<Q> = Vec::new();
            for e in eigs {
                if !uniq.contains(&e) {
                    uniq.push(e);
                }
            }
            let mut found = 0usize;
            for lam in uniq {
                let shifted = &restr - &QMat::identity(m).scale(&lam);
                let ker = shifted.null_space();
                if ker.is_empty() {
                    continue;
                }
                found += ker.len();
                let lifted: Vec<Vec<Q>> = ker.iter().map(|c| mat_vec(&span, c)).collect();
                let mut r = roots.clone();
                r.push(lam);
                next.push((r, lifted));
            }
            if found != m {
                return Err(LieError::NotRationallyDiagonalizable);
            }
        }
        parts = next;
    }
    let dec = Decomposition {
        kind: DecompositionKind::RootSpace,
        parts: parts
            .into_iter()
            .map(|(roots, vectors)| {
                let name = format!(
                    "({})",
                    roots.iter().map(format_q).collect::<Vec<_>>().join(",")
                );
                Subspace { name, vectors, roots: Some(roots) }
            })
            .collect(),
    };
    if !dec.is_direct_sum(n) {
        return Err(LieError::NotRationallyDiagonalizable);
    }
    Ok(dec)
}

/// Iwasawa data: the abelian part (by labels), a positivity weight vector,
/// and the resulting A + N + K splitting.
#[derive(Debug, Clone)]
pub struct IwasawaSpec {
    pub abelian_labels: Vec<String>,
    pub weights: Vec<Q>,
}

/// Iwasawa decomposition: parts "A" (the chosen abelian family), "N" (sum of
/// the root spaces on which the weight functional is positive), and "K"
/// (Cartan fixed part). The nonzero roots must all have nonzero weight value,
/// else `DegeneratePositivity` is raised.
pub fn iwasawa(alg: &LieAlgebraBasis, spec: &IwasawaSpec) -> Result<Decomposition, LieError> {
    assert_eq!(spec.abelian_labels.len(), spec.weights.len());
    let abelian: Vec<Vec<Q>> = spec
        .abelian_labels
        .iter()
        .map(|l| alg.unit(l))
        .collect::<Result<_, _>>()?;
    let roots = root_space_decompose(alg, &abelian)?;
    let mut n_vectors = Vec::new();
    let mut n_roots = Vec::new();
    for part in &roots.parts {
        let r = part.roots.as_ref().expect("root decomposition labels every part");
        if r.iter().all(|x| x.is_zero()) {
            continue;
        }
        let value: Q = r
            .iter()
            .zip(&spec.weights)
            .map(|(a, w)| a.clone() * w)
            .fold(Q::zero(), |acc, x| acc + x);
        if value.is_zero() {
            return Err(LieError::DegeneratePositivity(
                r.iter().map(format_q).collect(),
            ));
        }
        if value > Q::zero() {
            n_vectors.extend(part.vectors.clone());
            n_roots.push(part.name.clone());
        }
    }
    let cartan = cartan_decompose(alg)?;
    let k = cartan.part("K").expect("Cartan decomposition has a K part");
    let dec = Decomposition {
        kind: DecompositionKind::Iwasawa,
        parts: vec![
            Subspace { name: "A".into(), vectors: abelian, roots: None },
            Subspace { name: "N".into(), vectors: n_vectors, roots: None },
            Subspace { name: "K".into(), vectors: k.vectors.clone(), roots: None },
        ],
    };
    if !dec.is_direct_sum(alg.dim()) {
        return Err(LieError::DegeneratePositivity(vec!["A+N+K does not span".into()]));
    }
    Ok(dec)
}

/// Verified reductive pair: checks `[H, Q] ⊆ Q`, `[Q, Q] ⊆ H`, and
/// orthogonality of H and Q under the chosen Killing convention.
pub fn reductive_pair(
    alg: &LieAlgebraBasis,
    h: &[Vec<Q>],
    q: &[Vec<Q>],
    convention: KillingConvention,
) -> Result<Decomposition, LieError> {
    let h_span = columns(h);
    let q_span = columns(q);
    for hv in h {
        for qv in q {
            if !in_span(&q_span, &alg.bracket_vec(hv, qv)) {
                return Err(LieError::NotInSpan);
            }
        }
    }
    for (i, a) in q.iter().enumerate() {
        for b in &q[i..] {
            if !in_span(&h_span, &alg.bracket_vec(a, b)) {
                return Err(LieError::NotInSpan);
            }
        }
    }
    for hv in h {
        for qv in q {
            if !alg.killing_form(hv, qv, convention).is_zero() {
                return Err(LieError::NotInSpan);
            }
        }
    }
    let dec = Decomposition {
        kind: DecompositionKind::ReductiveHQ,
        parts: vec![
            Subspace { name: "H".into(), vectors: h.to_vec(), roots: None },
            Subspace { name: "Q".into(), vectors: q.to_vec(), roots: None },
        ],
    };
    Ok(dec)
}
