//! The property suites behind `socle check`.

use serde::Serialize;
use serde_json::{json, Value};

use socle::convert::{
    defect, duallr_to_hom, hom_to_duallr, hom_to_socle, socle_multiplicity_from_hom, socle_to_duallr, socle_to_hom,
};
use socle::embedding::{integer_corpus, random_corpus, EmbeddingJson};
use socle::partition::shapes_up_to;
use socle::realize::{build_chain, realize_socle, verify_epi_chain};
use socle::switching::{check_conjecture, ConjectureReport};
use socle::tableau::{check_lr, count, enumerate};
use socle::{Embedding, HomMatrix, SkewTableau, TableauKind};

pub const FIXTURE_M1: &str = include_str!("../../core/fixtures/M1.json");
pub const FIXTURE_M2: &str = include_str!("../../core/fixtures/M2.json");
pub const FIXTURE_M3: &str = include_str!("../../core/fixtures/M3.json");
pub const FIXTURE_SIGMA2: &str = include_str!("../../core/fixtures/sigma2.json");
pub const FIXTURE_GAMMA2_DUAL: &str = include_str!("../../core/fixtures/gamma2_dual.json");

/// Size of each random corpus in the `hom` suite.
pub const CORPUS_SIZE: usize = 200;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &'static str) -> Self {
        SuiteReport {
            suite,
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, outcome: Result<(), String>) {
        self.checked += 1;
        if let Err(e) = outcome {
            self.failures.push(e);
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Loads a fixture embedding over `F_p`.
pub fn fixture_embedding(text: &str, p: u32) -> Result<Embedding, String> {
    let mut j: EmbeddingJson = serde_json::from_str(text).map_err(|e| e.to_string())?;
    j.prime = p;
    Embedding::from_json_value(&j).map_err(|e| e.to_string())
}

/// Counts agree for the shape and its dual, and the duality map is an
/// injection into the LR-tableaux of the dual shape.
pub fn counts_case(shape: &socle::ShapeTriple) -> Result<(), String> {
    let socle_tableaux = enumerate(shape, TableauKind::Socle);
    let lr = count(shape, TableauKind::Lr);
    let dual_lr = shape.dual().map_or(0, |d| count(&d, TableauKind::Lr));
    if socle_tableaux.len() != lr || lr != dual_lr {
        return Err(format!(
            "{shape}: {} socle, {lr} LR, {dual_lr} LR of the dual shape",
            socle_tableaux.len()
        ));
    }
    let mut images = std::collections::BTreeSet::new();
    for sigma in &socle_tableaux {
        let g = socle_to_duallr(sigma).map_err(|e| format!("{shape}: {e}"))?;
        let dual = shape
            .dual()
            .ok_or_else(|| format!("{shape}: tableau without dual shape"))?;
        if g.shape() != &dual || !check_lr(&g) {
            return Err(format!("{shape}: image is not an LR-tableau of the dual shape"));
        }
        images.insert(g.to_grid());
    }
    if images.len() != socle_tableaux.len() {
        return Err(format!("{shape}: duality map is not injective"));
    }
    Ok(())
}

pub fn counts_suite(max_beta: usize) -> SuiteReport {
    let mut r = SuiteReport::new("counts");
    for shape in shapes_up_to(max_beta) {
        r.record(counts_case(&shape));
    }
    r
}

/// Realizes `sigma` over `F_p`, checks the chain and reads the tableau back.
pub fn realize_case(sigma: &SkewTableau, p: u32) -> Result<RealizeRecord, String> {
    let shape = sigma.shape().to_string();
    let chain = build_chain(sigma, p).map_err(|e| format!("{shape}: {e}"))?;
    let report = verify_epi_chain(&chain);
    if !report.is_clean() {
        return Err(format!("{shape}: {:?}", report.violations));
    }
    let x = realize_socle(sigma, p).map_err(|e| format!("{shape}: {e}"))?;
    let got = x.socle_tableau();
    if &x.shape() != sigma.shape() || &got != sigma {
        return Err(format!("{shape}: round trip gave {:?}", got.to_grid()));
    }
    Ok(RealizeRecord {
        shape,
        grid: got.to_grid(),
        dim_sub: x.sub().dim(),
        dim_ambient: x.ambient().dim(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizeRecord {
    pub shape: String,
    pub grid: Vec<Vec<usize>>,
    pub dim_sub: usize,
    pub dim_ambient: usize,
}

pub fn realize_suite(max_beta: usize, p: u32) -> (SuiteReport, Vec<RealizeRecord>) {
    let mut r = SuiteReport::new("realize");
    let mut records = Vec::new();
    for shape in shapes_up_to(max_beta) {
        for sigma in enumerate(&shape, TableauKind::Socle) {
            let outcome = realize_case(&sigma, p).map(|rec| records.push(rec));
            r.record(outcome);
        }
    }
    (r, records)
}

/// Integer invariants of one embedding, after checking that the three
/// routes to the Hom-matrix agree, that both inverses recover the tableaux,
/// and that the defect matches `μ_Σ` and the four-term expression.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomRecord {
    pub shape: String,
    pub sigma: Vec<Vec<usize>>,
    pub gamma_dual: Vec<Vec<usize>>,
    pub hom: Value,
    /// `defect[ℓ−1][m−1]` for `1 ≤ ℓ ≤ m ≤ β₁+α₁`.
    pub defect: Vec<Vec<Option<usize>>>,
}

/// The Hom-matrix of `x` after checking it against both tableau formulas
/// and both inverse reconstructions.
pub fn hom_triple_case(x: &Embedding) -> Result<(SkewTableau, SkewTableau, HomMatrix), String> {
    let shape = x.shape();
    let tag = |what: &str| format!("{shape}: {what}");
    let sigma = x.socle_tableau();
    let gamma_dual = x.dual_lr_tableau();
    let h = x.hom_matrix();
    if socle_to_hom(&sigma).map_err(|e| tag(&e.to_string()))? != h {
        return Err(tag("socle_to_hom differs from the Hom-matrix"));
    }
    if duallr_to_hom(&gamma_dual).map_err(|e| tag(&e.to_string()))? != h {
        return Err(tag("duallr_to_hom differs from the Hom-matrix"));
    }
    if hom_to_socle(&h).map_err(|e| tag(&e.to_string()))? != sigma {
        return Err(tag("hom_to_socle does not recover the socle tableau"));
    }
    if hom_to_duallr(&h).map_err(|e| tag(&e.to_string()))? != gamma_dual {
        return Err(tag("hom_to_duallr does not recover the dual LR-tableau"));
    }
    Ok((sigma, gamma_dual, h))
}

/// Defect table `d[ℓ−1][m−1]` after checking each entry against `μ_Σ(ℓ, m−ℓ)`
/// and, for `ℓ < m`, the four-term expression in `h`.
pub fn defect_case(x: &Embedding, sigma: &SkewTableau, h: &HomMatrix) -> Result<Vec<Vec<Option<usize>>>, String> {
    let shape = x.shape();
    let tag = |what: &str| format!("{shape}: {what}");
    let top = shape.beta.first() + shape.alpha.first();
    let mut table = vec![vec![None; top]; top];
    for l in 1..=top {
        for m in l..=top {
            let d = defect(x, l, m).map_err(|e| tag(&e.to_string()))?;
            let mu = if m > l { sigma.multiplicity(l, m - l) } else { 0 };
            if d != mu {
                return Err(tag(&format!("defect({l},{m}) = {d}, multiplicity {mu}")));
            }
            if m > l {
                let four = socle_multiplicity_from_hom(h, l, m - l);
                if four != d as i64 {
                    return Err(tag(&format!("defect({l},{m}) = {d}, h-expression {four}")));
                }
            }
            table[l - 1][m - 1] = Some(d);
        }
    }
    Ok(table)
}

pub fn hom_case(x: &Embedding) -> Result<HomRecord, String> {
    let (sigma, gamma_dual, h) = hom_triple_case(x)?;
    let defect = defect_case(x, &sigma, &h)?;
    Ok(HomRecord {
        shape: x.shape().to_string(),
        sigma: sigma.to_grid(),
        gamma_dual: gamma_dual.to_grid(),
        hom: h.to_json_value(),
        defect,
    })
}

/// Fixtures plus two seeded random corpora: prime-free 0/1 generator data
/// reduced mod `p`, and generators with arbitrary coefficients mod `p`.
pub fn hom_corpus(max_beta: usize, p: u32, seed: u64) -> Result<Vec<Embedding>, String> {
    let mut xs = Vec::new();
    for text in [FIXTURE_M1, FIXTURE_M2, FIXTURE_M3] {
        xs.push(fixture_embedding(text, p)?);
    }
    for d in integer_corpus(seed, CORPUS_SIZE, max_beta) {
        xs.push(d.reduce(p).map_err(|e| e.to_string())?);
    }
    xs.extend(random_corpus(p, seed, CORPUS_SIZE, max_beta).map_err(|e| e.to_string())?);
    Ok(xs)
}

pub fn hom_suite(max_beta: usize, p: u32, seed: u64) -> SuiteReport {
    let mut r = SuiteReport::new("hom");
    match hom_corpus(max_beta, p, seed) {
        Ok(xs) => {
            for x in &xs {
                r.record(hom_case(x).map(|_| ()));
            }
        }
        Err(e) => r.record(Err(e)),
    }
    r
}

pub fn switching_suite(max_beta: usize, seeds: usize, seed: u64) -> (SuiteReport, ConjectureReport) {
    let report = check_conjecture(max_beta, seeds, seed);
    let mut r = SuiteReport::new("switching");
    r.checked = report.runs;
    if report.order_dependent > 0 {
        r.failures.push(format!(
            "{} tableaux with order-dependent terminal states",
            report.order_dependent
        ));
    }
    (r, report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Counts,
    Realize,
    Hom,
    Switching,
    All,
}

impl Suite {
    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub max_beta: usize,
    pub prime: u32,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
    pub conjecture: Option<ConjectureReport>,
}

impl CheckReport {
    /// 3 for a switching counterexample, 2 for any other failed property, 0 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.conjecture.as_ref().is_some_and(|c| !c.mismatches.is_empty()) {
            3
        } else if self.suites.iter().any(|s| !s.passed()) {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> Value {
        json!(self)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "check |beta| <= {}  prime {}  seed {}\n",
            self.max_beta, self.prime, self.seed
        );
        for s in &self.suites {
            out.push_str(&format!(
                "{:<10} {:>7} checked  {:>4} failed\n",
                s.suite,
                s.checked,
                s.failures.len()
            ));
            for f in &s.failures {
                out.push_str(&format!("  failure: {f}\n"));
            }
        }
        if let Some(c) = &self.conjecture {
            out.push_str(&format!(
                "switching: relabeling {}, {} shapes, {} tableaux, {} runs, {} mismatches, {} order-dependent\n",
                c.relabeling,
                c.shapes,
                c.tableaux,
                c.runs,
                c.mismatches.len(),
                c.order_dependent
            ));
            for m in &c.mismatches {
                out.push_str(&format!(
                    "  counterexample {}: sigma {:?} seed {:?} expected {:?} got {:?}\n  replay: {}\n",
                    m.shape,
                    m.sigma,
                    m.seed,
                    m.expected,
                    m.got,
                    json!(m)
                ));
            }
        }
        out
    }
}

pub fn run_check(suite: Suite, max_beta: usize, p: u32, seed: u64, seeds: usize) -> CheckReport {
    let mut report = CheckReport {
        max_beta,
        prime: p,
        seed,
        suites: Vec::new(),
        conjecture: None,
    };
    if suite.includes(Suite::Counts) {
        report.suites.push(counts_suite(max_beta));
    }
    if suite.includes(Suite::Realize) {
        report.suites.push(realize_suite(max_beta, p).0);
    }
    if suite.includes(Suite::Hom) {
        report.suites.push(hom_suite(max_beta, p, seed));
    }
    if suite.includes(Suite::Switching) {
        let (s, c) = switching_suite(max_beta, seeds, seed);
        report.suites.push(s);
        report.conjecture = Some(c);
    }
    report
}
