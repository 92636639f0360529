use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, LazyLock, RwLock};

use num_traits::Zero;

use super::symfunc::{monomial_to_powersum_matrix, ordered_partitions, z_factor};
use super::{Basis, JackError, SymFuncElement, MAX_JACK_SIZE};
use crate::algebra::{parse_laurent, RatFuncA, Rational, UniPoly};
use crate::diagrams::YoungDiagram;

const CACHE_HEADER: &str = concat!("jackmaps-theta ", env!("CARGO_PKG_VERSION"), " 1");

/// All `θ_π(λ)` for `|λ| = |π| = n`, as rational functions in `A`.
#[derive(Debug)]
pub(crate) struct SizeTable {
    pub order: Vec<YoungDiagram>,
    pub index: HashMap<YoungDiagram, usize>,
    /// `theta[λ][π]`
    pub theta: Vec<Vec<RatFuncA>>,
}

static MEMO: LazyLock<RwLock<HashMap<u32, Arc<SizeTable>>>> = LazyLock::new(Default::default);
static CACHE_DIR: LazyLock<RwLock<Option<PathBuf>>> = LazyLock::new(Default::default);

/// Directs the oracle to persist `θ` tables under `dir`; `None` disables
/// the disk cache. Entries written by another version are ignored.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *CACHE_DIR.write().unwrap() = dir;
}

pub fn cache_dir() -> Option<PathBuf> {
    CACHE_DIR.read().unwrap().clone()
}

fn alpha_poly(c: Rational, e: usize) -> RatFuncA {
    RatFuncA::from_poly(UniPoly::monomial(c, e))
}

fn scale(x: &RatFuncA, c: &Rational) -> RatFuncA {
    if c.is_zero() || x.is_zero() {
        return RatFuncA::zero();
    }
    RatFuncA::new(x.numer().scale(c), x.denom().clone())
}

/// Gram–Schmidt in power-sum coordinates, with coefficients in `α`.
fn compute_alpha(order: &[YoungDiagram]) -> Vec<Vec<RatFuncA>> {
    let inv = monomial_to_powersum_matrix(order);
    let weights: Vec<RatFuncA> = order
        .iter()
        .map(|pi| alpha_poly(Rational::from_integer(z_factor(pi)), pi.rows()))
        .collect();
    let mut basis: Vec<Vec<RatFuncA>> = Vec::with_capacity(order.len());
    let mut weighted: Vec<Vec<RatFuncA>> = Vec::with_capacity(order.len());
    let mut norms: Vec<RatFuncA> = Vec::with_capacity(order.len());
    for row in &inv {
        let mut v: Vec<RatFuncA> = row.iter().cloned().map(RatFuncA::constant).collect();
        for (j, wp) in weighted.iter().enumerate() {
            let mut ip = RatFuncA::zero();
            for (c, w) in row.iter().zip(wp) {
                if !c.is_zero() && !w.is_zero() {
                    ip = ip + scale(w, c);
                }
            }
            if ip.is_zero() {
                continue;
            }
            let coeff = ip / norms[j].clone();
            for (x, b) in v.iter_mut().zip(&basis[j]) {
                if !b.is_zero() {
                    *x = x.clone() - coeff.clone() * b.clone();
                }
            }
        }
        let wv: Vec<RatFuncA> = v.iter().zip(&weights).map(|(x, w)| x.clone() * w.clone()).collect();
        let norm = v.iter().zip(&wv).fold(RatFuncA::zero(), |acc, (x, y)| acc + x.clone() * y.clone());
        basis.push(v);
        weighted.push(wv);
        norms.push(norm);
    }
    // J_λ has θ_{1^n} = 1, and (1^n) sits first in `order`.
    basis
        .into_iter()
        .map(|v| {
            let lead = v[0].inv().expect("P_λ has a nonzero p_{1^n} coefficient");
            v.into_iter().map(|x| x * lead.clone()).collect()
        })
        .collect()
}

fn cache_file(dir: &Path, lambda: &YoungDiagram) -> PathBuf {
    let key: Vec<String> = lambda.parts().iter().map(u32::to_string).collect();
    dir.join(format!("theta_{}.txt", key.join("_")))
}

fn parse_uni(text: &str) -> Option<UniPoly> {
    let l = parse_laurent(text).ok()?;
    if l.min_degree().is_some_and(|e| e < 0) {
        return None;
    }
    let top = l.max_degree().unwrap_or(0).max(0) as usize;
    let mut coeffs = vec![Rational::zero(); top + 1];
    for (e, c) in l.terms() {
        coeffs[e as usize] = c.clone();
    }
    Some(UniPoly::new(coeffs))
}

fn read_entry(dir: &Path, lambda: &YoungDiagram, order: &[YoungDiagram]) -> Option<Vec<RatFuncA>> {
    let text = fs::read_to_string(cache_file(dir, lambda)).ok()?;
    let mut lines = text.lines();
    if lines.next()? != CACHE_HEADER {
        return None;
    }
    let mut found: HashMap<YoungDiagram, RatFuncA> = HashMap::new();
    for line in lines {
        let mut cols = line.split('\t');
        let pi: YoungDiagram = cols.next()?.parse().ok()?;
        let numer = parse_uni(cols.next()?)?;
        let denom = parse_uni(cols.next()?)?;
        if denom.is_zero() {
            return None;
        }
        found.insert(pi, RatFuncA::new(numer, denom));
    }
    order.iter().map(|pi| found.remove(pi)).collect()
}

fn write_entry(dir: &Path, lambda: &YoungDiagram, order: &[YoungDiagram], row: &[RatFuncA]) {
    let mut out = String::from(CACHE_HEADER);
    out.push('\n');
    for (pi, t) in order.iter().zip(row) {
        out.push_str(&format!("{pi}\t{}\t{}\n", t.numer(), t.denom()));
    }
    let path = cache_file(dir, lambda);
    let tmp = path.with_extension("tmp");
    if fs::create_dir_all(dir).is_ok() && fs::write(&tmp, out).is_ok() {
        let _ = fs::rename(&tmp, &path);
    }
}

fn build_table(n: u32) -> SizeTable {
    let order = ordered_partitions(n);
    let index = order.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let dir = cache_dir();
    let cached: Option<Vec<Vec<RatFuncA>>> = dir
        .as_deref()
        .and_then(|d| order.iter().map(|l| read_entry(d, l, &order)).collect());
    let theta = match cached {
        Some(t) => t,
        None => {
            let t: Vec<Vec<RatFuncA>> = compute_alpha(&order)
                .into_iter()
                .map(|row| row.iter().map(RatFuncA::square_variable).collect())
                .collect();
            if let Some(d) = dir.as_deref() {
                for (lambda, row) in order.iter().zip(&t) {
                    write_entry(d, lambda, &order, row);
                }
            }
            t
        }
    };
    SizeTable { order, index, theta }
}

pub(crate) fn table(n: u32) -> Result<Arc<SizeTable>, JackError> {
    if n > MAX_JACK_SIZE {
        return Err(JackError::TooLarge { size: n, max: MAX_JACK_SIZE });
    }
    if let Some(t) = MEMO.read().unwrap().get(&n) {
        return Ok(t.clone());
    }
    let built = Arc::new(build_table(n));
    Ok(MEMO.write().unwrap().entry(n).or_insert(built).clone())
}

/// Integral-form Jack polynomial `J_λ` in power sums, with `α = A²`.
pub fn jack_j(lambda: &YoungDiagram) -> Result<SymFuncElement, JackError> {
    let t = table(lambda.size())?;
    let row = &t.theta[t.index[lambda]];
    let coeffs = t
        .order
        .iter()
        .zip(row)
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| (p.clone(), c.clone()))
        .collect();
    Ok(SymFuncElement { basis: Basis::PowerSum, coeffs })
}

/// `θ_π(λ)`: the coefficient of `p_π` in `J_λ`.
pub fn theta(pi: &YoungDiagram, lambda: &YoungDiagram) -> Result<RatFuncA, JackError> {
    if pi.size() != lambda.size() {
        return Err(JackError::SizeMismatch { pi: pi.size(), lambda: lambda.size() });
    }
    let t = table(lambda.size())?;
    Ok(t.theta[t.index[lambda]][t.index[pi]].clone())
}

/// `⟨f, g⟩ = Σ_π f_π g_π z_π α^{ℓ(π)}` for elements in the power-sum basis.
pub fn jack_inner_product(f: &SymFuncElement, g: &SymFuncElement) -> RatFuncA {
    assert!(f.basis == Basis::PowerSum && g.basis == Basis::PowerSum);
    let mut acc = RatFuncA::zero();
    for (pi, a) in &f.coeffs {
        if let Some(b) = g.coeffs.get(pi) {
            // α^ℓ = A^{2ℓ}
            let w = alpha_poly(Rational::from_integer(z_factor(pi)), 2 * pi.rows());
            acc = acc + a.clone() * b.clone() * w;
        }
    }
    acc
}
