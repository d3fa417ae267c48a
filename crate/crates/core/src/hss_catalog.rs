//! The six irreducible compact Hermitian symmetric space types with their
//! projective ranks, minimal degrees, `(M+, M-)` pairs and dimensions.
//!
//! `AIII(p, q)` is the Grassmannian of `p`-planes in `C^{p+q}`, stored with
//! `p ≤ q`. A projective `d`-plane in `P^n` is a `(d+1)`-plane in
//! `C^{n+1}`, so `Gr(d, n)` is `AIII` with parameters `{d+1, n-d}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{param, Error, Result};
use crate::root_system::{build_root_system, parabolic_split, TypeLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HermitianSpace {
    Aiii { p: usize, q: usize },
    Bdi { m: usize },
    Ci { n: usize },
    Diii { n: usize },
    Eiii,
    Evii,
}

impl HermitianSpace {
    pub fn aiii(p: usize, q: usize) -> Result<Self> {
        if p < 1 || p > q {
            return param(format!("AIII needs 1 ≤ p ≤ q, got ({p}, {q})"));
        }
        Ok(HermitianSpace::Aiii { p, q })
    }

    /// Projective `d`-planes in `P^n`, `0 ≤ d < n`.
    pub fn grassmannian(d: usize, n: usize) -> Result<Self> {
        if d >= n {
            return param(format!("Gr(d, n) needs d < n, got ({d}, {n})"));
        }
        let (a, b) = (d + 1, n - d);
        Self::aiii(a.min(b), a.max(b))
    }

    /// The quadric `Q_m`, `m ≥ 3`.
    pub fn bdi(m: usize) -> Result<Self> {
        if m < 3 {
            return param(format!("BDI needs m ≥ 3, got {m}"));
        }
        Ok(HermitianSpace::Bdi { m })
    }

    pub fn ci(n: usize) -> Result<Self> {
        if n < 2 {
            return param(format!("CI needs n ≥ 2, got {n}"));
        }
        Ok(HermitianSpace::Ci { n })
    }

    pub fn diii(n: usize) -> Result<Self> {
        if n < 3 {
            return param(format!("DIII needs n ≥ 3, got {n}"));
        }
        Ok(HermitianSpace::Diii { n })
    }

    /// Builds a descriptor from a kind name (`AIII`, `Gr`, `BDI`, `CI`,
    /// `DIII`, `EIII`, `EVII`) and its integer parameters. `Gr` takes
    /// `(d, n)`; `AIII` takes `(p, q)` in either order.
    pub fn from_kind(kind: &str, params: &[usize]) -> Result<Self> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                param(format!("{kind} takes {k} parameter(s), got {}", params.len()))
            }
        };
        match kind.to_ascii_uppercase().as_str() {
            "AIII" => {
                want(2)?;
                Self::aiii(params[0].min(params[1]), params[0].max(params[1]))
            }
            "GR" => {
                want(2)?;
                Self::grassmannian(params[0], params[1])
            }
            "BDI" => {
                want(1)?;
                Self::bdi(params[0])
            }
            "CI" => {
                want(1)?;
                Self::ci(params[0])
            }
            "DIII" => {
                want(1)?;
                Self::diii(params[0])
            }
            "EIII" => want(0).map(|_| HermitianSpace::Eiii),
            "EVII" => want(0).map(|_| HermitianSpace::Evii),
            _ => param(format!("unknown kind {kind:?}")),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            HermitianSpace::Aiii { .. } => "AIII",
            HermitianSpace::Bdi { .. } => "BDI",
            HermitianSpace::Ci { .. } => "CI",
            HermitianSpace::Diii { .. } => "DIII",
            HermitianSpace::Eiii => "EIII",
            HermitianSpace::Evii => "EVII",
        }
    }

    pub fn params(&self) -> BTreeMap<&'static str, usize> {
        match *self {
            HermitianSpace::Aiii { p, q } => BTreeMap::from([("p", p), ("q", q)]),
            HermitianSpace::Bdi { m } => BTreeMap::from([("m", m)]),
            HermitianSpace::Ci { n } | HermitianSpace::Diii { n } => BTreeMap::from([("n", n)]),
            HermitianSpace::Eiii | HermitianSpace::Evii => BTreeMap::new(),
        }
    }

    /// Root system and 1-based marked simple root.
    pub fn marked_root(&self) -> (TypeLabel, usize, usize) {
        match *self {
            HermitianSpace::Aiii { p, q } => (TypeLabel::A, p + q - 1, p),
            HermitianSpace::Bdi { m } if m % 2 == 1 => (TypeLabel::B, (m + 1) / 2, 1),
            HermitianSpace::Bdi { m } => (TypeLabel::D, (m + 2) / 2, 1),
            HermitianSpace::Ci { n } => (TypeLabel::C, n, n),
            HermitianSpace::Diii { n } => (TypeLabel::D, n, n),
            HermitianSpace::Eiii => (TypeLabel::E6, 6, 1),
            HermitianSpace::Evii => (TypeLabel::E7, 7, 7),
        }
    }
}

impl fmt::Display for HermitianSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HermitianSpace::Aiii { p, q } => write!(f, "AIII({p},{q})"),
            HermitianSpace::Bdi { m } => write!(f, "BDI({m})"),
            HermitianSpace::Ci { n } => write!(f, "CI({n})"),
            HermitianSpace::Diii { n } => write!(f, "DIII({n})"),
            HermitianSpace::Eiii => write!(f, "EIII"),
            HermitianSpace::Evii => write!(f, "EVII"),
        }
    }
}

impl FromStr for HermitianSpace {
    type Err = Error;

    /// `EIII`, `BDI(7)`, `AIII(2,3)`, `Gr(3,6)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) = match s.find('(') {
            Some(i) => (&s[..i], s[i + 1..].strip_suffix(')').ok_or_else(|| Error::Parameter(format!("unbalanced {s:?}")))?),
            None => (s, ""),
        };
        let params: Vec<usize> = rest
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| Error::Parameter(format!("bad parameter {t:?}"))))
            .collect::<Result<_>>()?;
        Self::from_kind(kind, &params)
    }
}

pub fn projective_rank(s: &HermitianSpace) -> usize {
    match *s {
        HermitianSpace::Aiii { q, .. } => q,
        HermitianSpace::Bdi { m } => m / 2,
        HermitianSpace::Ci { n } | HermitianSpace::Diii { n } => n - 1,
        HermitianSpace::Eiii => 5,
        HermitianSpace::Evii => 6,
    }
}

/// `|Φ(n+)|` for the marked root of the descriptor.
pub fn complex_dimension(s: &HermitianSpace) -> Result<usize> {
    let (label, rank, marked) = s.marked_root();
    let rs = build_root_system(label, rank)?;
    Ok(parabolic_split(&rs, marked)?.dimension)
}

/// Degree of a maximal totally geodesic projective space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinDegree {
    One,
    Two,
    OneOrTwo,
}

impl MinDegree {
    pub fn values(&self) -> &'static [u32] {
        match self {
            MinDegree::One => &[1],
            MinDegree::Two => &[2],
            MinDegree::OneOrTwo => &[1, 2],
        }
    }
}

impl fmt::Display for MinDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinDegree::One => write!(f, "1"),
            MinDegree::Two => write!(f, "2"),
            MinDegree::OneOrTwo => write!(f, "1 or 2"),
        }
    }
}

impl Serialize for MinDegree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            MinDegree::OneOrTwo => s.collect_seq(self.values()),
            _ => s.serialize_u32(self.values()[0]),
        }
    }
}

pub fn min_degree(s: &HermitianSpace) -> MinDegree {
    match s {
        HermitianSpace::Aiii { .. } | HermitianSpace::Eiii | HermitianSpace::Evii => MinDegree::One,
        HermitianSpace::Ci { .. } | HermitianSpace::Diii { .. } => MinDegree::Two,
        HermitianSpace::Bdi { .. } => MinDegree::OneOrTwo,
    }
}

/// One factor of an `M+` or `M-` entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    Point,
    Space(HermitianSpace),
    /// Anything outside the catalog (real Grassmannians, spheres, small
    /// cases); kept as a label.
    Label(String),
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Point => write!(f, "pt"),
            Factor::Space(s) => write!(f, "{s}"),
            Factor::Label(l) => write!(f, "{l}"),
        }
    }
}

fn complex_grassmannian(a: usize, b: usize) -> Factor {
    if a == 0 || b == 0 {
        Factor::Point
    } else {
        Factor::Space(HermitianSpace::Aiii { p: a.min(b), q: a.max(b) })
    }
}

fn real_grassmannian(a: usize, b: usize) -> Factor {
    if a == 0 || b == 0 {
        Factor::Point
    } else {
        Factor::Label(format!("G^R({a},{b})"))
    }
}

fn ci_factor(k: usize) -> Factor {
    match k {
        0 => Factor::Point,
        1 => Factor::Label("CI(1)".into()),
        _ => Factor::Space(HermitianSpace::Ci { n: k }),
    }
}

fn diii_factor(k: usize) -> Factor {
    match k {
        0 | 1 => Factor::Point,
        2 => Factor::Label("DIII(2)".into()),
        _ => Factor::Space(HermitianSpace::Diii { n: k }),
    }
}

fn join(fs: &[Factor]) -> String {
    fs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" × ")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricPair {
    pub m_plus: Vec<Factor>,
    pub m_minus: Vec<Factor>,
    pub constraint: String,
}

impl SymmetricPair {
    /// Projective rank of `M+` when every factor is a point or a catalog
    /// space; the rank of a product is the largest rank of a factor.
    pub fn m_plus_rank(&self) -> Option<usize> {
        let mut best = 0;
        for f in &self.m_plus {
            match f {
                Factor::Point => {}
                Factor::Space(s) => best = best.max(projective_rank(s)),
                Factor::Label(_) => return None,
            }
        }
        Some(best)
    }

    pub fn nontrivial_factors(fs: &[Factor]) -> Vec<&Factor> {
        fs.iter().filter(|f| **f != Factor::Point).collect()
    }
}

impl Serialize for SymmetricPair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SymmetricPair", 3)?;
        st.serialize_field("m_plus", &join(&self.m_plus))?;
        st.serialize_field("m_minus", &join(&self.m_minus))?;
        st.serialize_field("constraint", &self.constraint)?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairTable {
    pub pairs: Vec<SymmetricPair>,
    /// The `#P(M)` value of the classification table.
    pub count: usize,
    /// Alternative labels recorded alongside the table entries.
    pub notes: Vec<String>,
}

/// `(M+, M-)` pairs. `BDI(m)` is treated as `G^R(2, m)`; `CI(n)` uses
/// `0 ≤ k ≤ n-1`; `DIII(n)` uses even `k` with `0 < k ≤ n`.
pub fn symmetric_pairs(s: &HermitianSpace) -> PairTable {
    let mut notes = Vec::new();
    let (pairs, count) = match *s {
        HermitianSpace::Aiii { p, q } => (
            (1..=p)
                .map(|h| SymmetricPair {
                    m_plus: vec![complex_grassmannian(h, p - h), complex_grassmannian(h, q - h)],
                    m_minus: vec![complex_grassmannian(h, h), complex_grassmannian(p - h, q - h)],
                    constraint: format!("h = {h}, 0 < h ≤ p ≤ q"),
                })
                .collect(),
            p,
        ),
        HermitianSpace::Bdi { m } => {
            let p = 2;
            (
                (1..=p)
                    .map(|h| SymmetricPair {
                        m_plus: vec![real_grassmannian(h, p - h), real_grassmannian(h, m - h)],
                        m_minus: vec![real_grassmannian(h, h), real_grassmannian(p - h, m - h)],
                        constraint: format!("h = {h}, 0 < h ≤ 2 ≤ m"),
                    })
                    .collect(),
                p,
            )
        }
        HermitianSpace::Ci { n } => (
            (0..n)
                .map(|k| SymmetricPair {
                    m_plus: vec![complex_grassmannian(k, n - k)],
                    m_minus: vec![ci_factor(k), ci_factor(n - k)],
                    constraint: format!("k = {k}, 0 ≤ k ≤ n-1"),
                })
                .collect(),
            n,
        ),
        HermitianSpace::Diii { n } => (
            (2..=n)
                .step_by(2)
                .map(|k| SymmetricPair {
                    m_plus: vec![complex_grassmannian(k, n - k)],
                    m_minus: vec![diii_factor(k), diii_factor(n - k)],
                    constraint: format!("k = {k}, 0 < k ≤ n, k even"),
                })
                .collect(),
            n / 2,
        ),
        HermitianSpace::Eiii => (
            vec![SymmetricPair {
                m_plus: vec![Factor::Space(HermitianSpace::Diii { n: 5 })],
                m_minus: vec![Factor::Label("S^2".into()), complex_grassmannian(5, 1)],
                constraint: String::new(),
            }],
            2,
        ),
        HermitianSpace::Evii => {
            notes.push("M- is also written S^2 × G^R(12,2)".to_string());
            (
                vec![SymmetricPair {
                    m_plus: vec![Factor::Space(HermitianSpace::Eiii)],
                    m_minus: vec![Factor::Label("S^2".into()), Factor::Label("G^R(10,2)".into())],
                    constraint: String::new(),
                }],
                2,
            )
        }
    };
    PairTable { pairs, count, notes }
}

/// The closed form for `#P(M)`, independent of the pair table.
pub fn pair_count_formula(s: &HermitianSpace) -> usize {
    match *s {
        HermitianSpace::Aiii { p, .. } => p,
        HermitianSpace::Bdi { .. } => 2,
        HermitianSpace::Ci { n } => n,
        HermitianSpace::Diii { n } => n / 2,
        HermitianSpace::Eiii | HermitianSpace::Evii => 2,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HssRecord {
    pub kind: &'static str,
    pub params: BTreeMap<&'static str, usize>,
    #[serde(rename = "dim_C")]
    pub dim_c: usize,
    pub projective_rank: usize,
    pub min_degree: MinDegree,
    pub pairs: Vec<SymmetricPair>,
    pub count: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

pub fn record(s: &HermitianSpace) -> Result<HssRecord> {
    let table = symmetric_pairs(s);
    Ok(HssRecord {
        kind: s.kind(),
        params: s.params(),
        dim_c: complex_dimension(s)?,
        projective_rank: projective_rank(s),
        min_degree: min_degree(s),
        pairs: table.pairs,
        count: table.count,
        notes: table.notes,
    })
}

/// Bounds for [`sweep`]: `p, q ≤ max_pq`, `3 ≤ m ≤ max_m`, `n ≤ max_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepBounds {
    pub max_pq: usize,
    pub max_m: usize,
    pub max_n: usize,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds { max_pq: 8, max_m: 12, max_n: 8 }
    }
}

pub fn sweep(b: SweepBounds) -> Vec<HermitianSpace> {
    let mut out = Vec::new();
    for q in 1..=b.max_pq {
        for p in 1..=q {
            out.push(HermitianSpace::Aiii { p, q });
        }
    }
    out.extend((3..=b.max_m).map(|m| HermitianSpace::Bdi { m }));
    out.extend((2..=b.max_n).map(|n| HermitianSpace::Ci { n }));
    out.extend((3..=b.max_n).map(|n| HermitianSpace::Diii { n }));
    out.push(HermitianSpace::Eiii);
    out.push(HermitianSpace::Evii);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyCheck {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub checks: Vec<ConsistencyCheck>,
    pub violations: usize,
    /// Readings of the rank formulas that disagree with the adopted one.
    pub flags: Vec<String>,
}

/// Cross-checks the projective ranks against each other and against the
/// pair table over the given sweep.
pub fn rank_consistency_report(bounds: SweepBounds) -> ConsistencyReport {
    let mut checks = Vec::new();
    let mut push = |name: String, holds: bool, detail: String| checks.push(ConsistencyCheck { name, holds, detail });
    let pr = |s: HermitianSpace| projective_rank(&s);

    let d5 = pr(HermitianSpace::Diii { n: 5 });
    push("pr(EIII) = pr(DIII(5)) + 1".into(), pr(HermitianSpace::Eiii) == d5 + 1, format!("{} vs {}", pr(HermitianSpace::Eiii), d5 + 1));
    push(
        "pr(EVII) = pr(EIII) + 1".into(),
        pr(HermitianSpace::Evii) == pr(HermitianSpace::Eiii) + 1,
        format!("{} vs {}", pr(HermitianSpace::Evii), pr(HermitianSpace::Eiii) + 1),
    );
    for n in 2..=bounds.max_n {
        let ci = pr(HermitianSpace::Ci { n });
        let a = pr(HermitianSpace::Aiii { p: n, q: n });
        push(format!("pr(CI({n})) = pr(AIII({n},{n})) - 1"), ci + 1 == a, format!("{ci} vs {a} - 1"));
    }

    let spaces = sweep(bounds);
    for s in &spaces {
        let table = symmetric_pairs(s);
        let mut best: Option<usize> = None;
        for (i, pair) in table.pairs.iter().enumerate() {
            if let Some(r) = pair.m_plus_rank() {
                best = Some(best.map_or(r, |b| b.max(r)));
                push(format!("pr(M+) ≤ pr(M) for {s} pair {i}"), r <= pr(*s), format!("{r} ≤ {}", pr(*s)));
            }
        }
        if let Some(b) = best {
            push(format!("some M+ of {s} has rank ≥ pr(M) - 1"), b + 1 >= pr(*s), format!("max {b}, pr {}", pr(*s)));
        }
        if let Ok(dim) = complex_dimension(s) {
            push(format!("pr ≤ dim for {s}"), pr(*s) <= dim, format!("{} ≤ {dim}", pr(*s)));
        }
    }

    for n in 2..=bounds.max_pq {
        let table = symmetric_pairs(&HermitianSpace::Aiii { p: 1, q: n });
        let pair = &table.pairs[0];
        let plus = SymmetricPair::nontrivial_factors(&pair.m_plus);
        let minus = SymmetricPair::nontrivial_factors(&pair.m_minus);
        let holds = plus == [&Factor::Space(HermitianSpace::Aiii { p: 1, q: n - 1 })]
            && minus == [&Factor::Space(HermitianSpace::Aiii { p: 1, q: 1 })];
        push(format!("P^{n} has the pair (P^{}, S^2)", n - 1), holds, format!("{} / {}", join(&pair.m_plus), join(&pair.m_minus)));
    }

    let mut flags = Vec::new();
    for n in 2..=2 * bounds.max_pq {
        for d in n.div_ceil(2)..n {
            if let Ok(s) = HermitianSpace::grassmannian(d, n) {
                if pr(s) != d {
                    flags.push(format!("Gr({d},{n}): the reading pr = d gives {d}, adopted value {}", pr(s)));
                    break;
                }
            }
        }
        if !flags.is_empty() {
            break;
        }
    }

    let violations = checks.iter().filter(|c| !c.holds).count();
    ConsistencyReport { checks, violations, flags }
}
