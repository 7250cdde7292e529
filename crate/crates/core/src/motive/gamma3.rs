//! The modified small diagonal Γ₃ of a curve or a regular surface, and identities derived
//! mechanically from Γ₃ = 0 by letting it act on cycles of X and X×X.

use std::collections::BTreeMap;
use std::fmt;

use crate::exact::{int, Scalar};

use super::cycle::{self, ClassAlgebra, Cycle, Monomial, STEP_BOUND};
use super::formal::{FormalPoly, Ring};
use super::model::CohModel;
use super::tensor::Tensor;
use super::MotiveError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// A zero-cycle of degree 1.
    Point,
    /// The top Chern class of the tangent bundle.
    TopChern,
    /// The canonical class.
    Canonical,
    /// Formal divisors on a surface.
    DivisorA,
    DivisorB,
}

/// A monomial in the generators.
pub type FormalClass = BTreeMap<Generator, u32>;

pub type FormalCycle = Cycle<FormalClass, FormalPoly>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarietyKind {
    /// A curve; `None` keeps the genus as the symbol g.
    Curve { genus: Option<u32> },
    /// A surface with vanishing irregularity; χ_top stays symbolic.
    Surface,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gamma3Context {
    kind: VarietyKind,
}

pub fn class_of(g: Generator) -> FormalClass {
    let mut c = FormalClass::new();
    c.insert(g, 1);
    c
}

impl Gamma3Context {
    pub fn curve() -> Self {
        Gamma3Context {
            kind: VarietyKind::Curve { genus: None },
        }
    }

    pub fn curve_of_genus(genus: u32) -> Self {
        Gamma3Context {
            kind: VarietyKind::Curve { genus: Some(genus) },
        }
    }

    pub fn surface() -> Self {
        Gamma3Context {
            kind: VarietyKind::Surface,
        }
    }

    pub fn kind(&self) -> VarietyKind {
        self.kind
    }

    fn genus(&self) -> FormalPoly {
        match self.kind {
            VarietyKind::Curve { genus: Some(g) } => FormalPoly::constant(int(g as i64)),
            _ => FormalPoly::symbol("g"),
        }
    }

    /// deg K = 2g - 2 on a curve.
    pub fn canonical_degree(&self) -> FormalPoly {
        self.genus()
            .scaled(&int(2))
            .add(&FormalPoly::constant(int(-2)))
    }

    /// χ_top: 2 - 2g for a curve, a symbol for a surface.
    pub fn euler_characteristic(&self) -> FormalPoly {
        match self.kind {
            VarietyKind::Curve { .. } => self.canonical_degree().neg(),
            VarietyKind::Surface => FormalPoly::symbol("χ_top"),
        }
    }

    fn generator_degree(&self, g: Generator) -> u32 {
        match (self.kind, g) {
            (VarietyKind::Surface, Generator::Point | Generator::TopChern) => 2,
            _ => 1,
        }
    }

    fn generator_name(&self, g: Generator) -> &'static str {
        match (self.kind, g) {
            (_, Generator::Point) => "z",
            (VarietyKind::Curve { .. }, Generator::TopChern) => "c₁(T_C)",
            (VarietyKind::Surface, Generator::TopChern) => "c₂(T_S)",
            (_, Generator::Canonical) => "K",
            (_, Generator::DivisorA) => "D",
            (_, Generator::DivisorB) => "D′",
        }
    }

    fn formal(&self, g: Generator) -> FormalCycle {
        cycle::pullback_class(self, 1, 0, class_of(g))
    }
}

impl ClassAlgebra for Gamma3Context {
    type Coeff = FormalPoly;
    type Class = FormalClass;

    fn dim(&self) -> u32 {
        match self.kind {
            VarietyKind::Curve { .. } => 1,
            VarietyKind::Surface => 2,
        }
    }

    fn unit_class(&self) -> FormalClass {
        FormalClass::new()
    }

    fn class_degree(&self, c: &FormalClass) -> u32 {
        c.iter().map(|(g, e)| self.generator_degree(*g) * e).sum()
    }

    fn multiply(&self, a: &FormalClass, b: &FormalClass) -> Vec<(FormalPoly, FormalClass)> {
        let mut c = a.clone();
        for (g, e) in b {
            *c.entry(*g).or_insert(0) += e;
        }
        if self.class_degree(&c) > self.dim() {
            vec![]
        } else {
            vec![(FormalPoly::one(), c)]
        }
    }

    fn top_chern(&self) -> Vec<(FormalPoly, FormalClass)> {
        vec![(FormalPoly::one(), class_of(Generator::TopChern))]
    }

    fn evaluate(&self, c: &FormalClass) -> FormalPoly {
        let single = (c.len() == 1)
            .then(|| c.iter().next().map(|(g, e)| (*g, *e)))
            .flatten();
        match (self.kind, single) {
            (_, Some((Generator::Point, 1))) => FormalPoly::one(),
            (_, Some((Generator::TopChern, 1))) => self.euler_characteristic(),
            (VarietyKind::Curve { .. }, Some((Generator::Canonical, 1))) => self.canonical_degree(),
            _ => FormalPoly::symbol(&format!("deg({})", self.render_class(c))),
        }
    }

    fn render_class(&self, c: &FormalClass) -> String {
        if c.is_empty() {
            return "1".into();
        }
        c.iter()
            .map(|(g, &e)| {
                let name = self.generator_name(*g);
                if e == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("·")
    }
}

/// Γ₃ as its seven displayed terms, in order.
#[derive(Debug, Clone, PartialEq)]
pub struct Gamma3 {
    pub terms: Vec<(i64, FormalCycle)>,
}

impl Gamma3 {
    pub fn signs(&self) -> Vec<i64> {
        self.terms.iter().map(|(s, _)| *s).collect()
    }

    pub fn to_cycle(&self) -> FormalCycle {
        self.terms.iter().fold(Cycle::zero(3), |acc, (s, c)| {
            acc.add(&c.scaled(&FormalPoly::constant(int(*s))))
        })
    }

    pub fn render(&self, ctx: &Gamma3Context) -> String {
        let mut out = String::new();
        for (i, (s, c)) in self.terms.iter().enumerate() {
            let body = cycle::render(ctx, c);
            out.push_str(match (i, *s < 0) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            });
            out.push_str(&body);
        }
        out
    }
}

/// δ - Δ₁₂·p₃*z - Δ₁₃·p₂*z - Δ₂₃·p₁*z + p₁*z·p₂*z + p₁*z·p₃*z + p₂*z·p₃*z.
pub fn gamma3(ctx: &Gamma3Context) -> Gamma3 {
    let z = class_of(Generator::Point);
    let unit = FormalPoly::one();
    let diag_z = |pair: [usize; 2], other: usize| {
        cycle::monomial(
            ctx,
            3,
            vec![
                (pair.to_vec(), FormalClass::new()),
                (vec![other], z.clone()),
            ],
            unit.clone(),
        )
    };
    let zz = |a: usize, b: usize| {
        cycle::monomial(
            ctx,
            3,
            vec![(vec![a], z.clone()), (vec![b], z.clone())],
            unit.clone(),
        )
    };
    Gamma3 {
        terms: vec![
            (1, cycle::diagonal(ctx, 3, vec![0, 1, 2])),
            (-1, diag_z([0, 1], 2)),
            (-1, diag_z([0, 2], 1)),
            (-1, diag_z([1, 2], 0)),
            (1, zz(0, 1)),
            (1, zz(0, 2)),
            (1, zz(1, 2)),
        ],
    }
}

/// Γ₃ acting as a correspondence: push_target(Γ₃ · pull_source(α)).
pub fn act(
    ctx: &Gamma3Context,
    gamma: &FormalCycle,
    alpha: &FormalCycle,
    source: &[usize],
    target: &[usize],
) -> Result<FormalCycle, MotiveError> {
    let pulled = cycle::pullback(ctx, alpha, source, 3);
    let prod = cycle::multiply(ctx, gamma, &pulled)?;
    Ok(cycle::pushforward(ctx, &prod, target))
}

/// Pushforwards of Γ₃ to each X×X; all vanish when deg z = 1.
pub fn gamma3_pushforwards(ctx: &Gamma3Context) -> Vec<FormalCycle> {
    let g = gamma3(ctx).to_cycle();
    [[1, 2], [0, 2], [0, 1]]
        .iter()
        .map(|keep| cycle::pushforward(ctx, &g, keep))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct DerivedIdentity {
    pub name: String,
    pub lhs: FormalCycle,
    pub rhs: FormalCycle,
    pub trace: Vec<String>,
}

impl DerivedIdentity {
    pub fn statement(&self, ctx: &Gamma3Context) -> String {
        format!(
            "{} = {}",
            cycle::render(ctx, &self.lhs),
            cycle::render(ctx, &self.rhs)
        )
    }
}

impl fmt::Display for VarietyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarietyKind::Curve { genus: Some(g) } => write!(f, "curve of genus {g}"),
            VarietyKind::Curve { genus: None } => write!(f, "curve of genus g"),
            VarietyKind::Surface => write!(f, "regular surface"),
        }
    }
}

fn single_term(c: &FormalCycle, m: &Monomial<FormalClass>) -> FormalCycle {
    let mut out = Cycle::zero(c.arity());
    out.add_term(m.clone(), FormalPoly::one());
    out
}

/// Reads `relation = 0` as `target = rest`; the coefficient of `target` must be a nonzero constant.
fn solve_for(
    relation: &FormalCycle,
    target: &FormalCycle,
) -> Result<(FormalCycle, FormalCycle), MotiveError> {
    let (m, _) = target
        .terms()
        .iter()
        .next()
        .ok_or_else(|| MotiveError::Underived("empty target".into()))?;
    let coeff = relation
        .terms()
        .get(m)
        .and_then(|c| c.as_scalar())
        .filter(|c| c != &int(0))
        .ok_or_else(|| {
            MotiveError::Underived("target does not occur with a constant coefficient".into())
        })?;
    let lead = single_term(relation, m);
    let rest = relation.sub(&lead.scaled(&FormalPoly::constant(coeff.clone())));
    let inv: Scalar = -(int(1) / coeff);
    Ok((lead, rest.scaled(&FormalPoly::constant(inv))))
}

/// Replaces every occurrence of the monomial `pattern` by `replacement`.
fn rewrite_monomial(
    c: &FormalCycle,
    pattern: &FormalCycle,
    replacement: &FormalCycle,
    steps: &mut usize,
) -> Result<FormalCycle, MotiveError> {
    let (m, _) = pattern.terms().iter().next().expect("nonempty pattern");
    let mut out = Cycle::zero(c.arity());
    for (mm, k) in c.terms() {
        if mm == m {
            bump(steps)?;
            out = out.add(&replacement.scaled(k));
        } else {
            out.add_term(mm.clone(), k.clone());
        }
    }
    Ok(out)
}

fn bump(steps: &mut usize) -> Result<(), MotiveError> {
    *steps += 1;
    if *steps > STEP_BOUND {
        return Err(MotiveError::Underived(format!(
            "rewriting exceeded {STEP_BOUND} steps"
        )));
    }
    Ok(())
}

/// Substitutes a linear combination of classes for a generator inside every block.
fn substitute(
    ctx: &Gamma3Context,
    c: &FormalCycle,
    generator: Generator,
    value: &[(FormalPoly, FormalClass)],
    steps: &mut usize,
) -> Result<FormalCycle, MotiveError> {
    let mut out = Cycle::zero(c.arity());
    for (m, k) in c.terms() {
        let mut partial: Vec<(FormalPoly, Vec<cycle::Block<FormalClass>>)> =
            vec![(k.clone(), Vec::new())];
        for b in m.blocks() {
            let e = b.class.get(&generator).copied().unwrap_or(0);
            let mut rest = b.class.clone();
            rest.remove(&generator);
            let mut lin = vec![(FormalPoly::one(), rest)];
            for _ in 0..e {
                bump(steps)?;
                let mut next = Vec::new();
                for (c1, cls) in &lin {
                    for (c2, v) in value {
                        for (c3, prod) in ctx.multiply(cls, v) {
                            next.push((c1.mul(c2).mul(&c3), prod));
                        }
                    }
                }
                lin = next;
            }
            let mut next = Vec::new();
            for (c1, blocks) in &partial {
                for (c2, cls) in &lin {
                    let mut bl = blocks.clone();
                    bl.push(cycle::Block {
                        factors: b.factors.clone(),
                        class: cls.clone(),
                    });
                    next.push((c1.mul(c2), bl));
                }
            }
            partial = next;
        }
        for (coeff, blocks) in partial {
            let spec: Vec<(Vec<usize>, FormalClass)> =
                blocks.into_iter().map(|b| (b.factors, b.class)).collect();
            out = out.add(&cycle::monomial(ctx, c.arity(), spec, coeff));
        }
    }
    Ok(out)
}

/// Lets each displayed term of Γ₃ act on α and records the outcome.
fn act_traced(
    ctx: &Gamma3Context,
    alpha: &FormalCycle,
    source: &[usize],
    target: &[usize],
    label: &str,
    trace: &mut Vec<String>,
) -> Result<FormalCycle, MotiveError> {
    let g = gamma3(ctx);
    let mut total = Cycle::zero(target.len());
    trace.push(format!("act with Γ₃ on {label}"));
    for (s, term) in &g.terms {
        let image = act(ctx, term, alpha, source, target)?;
        let signed = image.scaled(&FormalPoly::constant(int(*s)));
        trace.push(format!(
            "  {}{} ↦ {}",
            if *s < 0 { "-" } else { "+" },
            cycle::render(ctx, term),
            cycle::render(ctx, &signed)
        ));
        total = total.add(&signed);
    }
    trace.push(format!("  sum: {} = 0", cycle::render(ctx, &total)));
    Ok(total)
}

/// c_top = χ_top·z, from Γ₃ acting on Δ.
fn derive_top_chern(ctx: &Gamma3Context) -> Result<DerivedIdentity, MotiveError> {
    let mut trace = vec!["self-intersection: Δ·Δ = Δ_*(c_top)".to_string()];
    let delta = cycle::diagonal(ctx, 2, vec![0, 1]);
    let relation = act_traced(ctx, &delta, &[0, 1], &[2], "Δ", &mut trace)?;
    let (lhs, rhs) = solve_for(&relation, &ctx.formal(Generator::TopChern))?;
    let name = match ctx.kind {
        VarietyKind::Curve { .. } => "c₁(T_C)",
        VarietyKind::Surface => "c₂(T_S)",
    };
    Ok(DerivedIdentity {
        name: name.into(),
        lhs,
        rhs,
        trace,
    })
}

/// p₁*K·p₂*K = deg(K)·p₁*K·Δ on C×C.
fn derive_faber_pandharipande(
    ctx: &Gamma3Context,
    top: &DerivedIdentity,
) -> Result<DerivedIdentity, MotiveError> {
    let mut trace = Vec::new();
    let k = class_of(Generator::Canonical);
    let kc = ctx.formal(Generator::Canonical);
    let relation = act_traced(ctx, &kc, &[0], &[1, 2], "K", &mut trace)?;
    let pattern = cycle::monomial(ctx, 2, vec![(vec![0, 1], k.clone())], FormalPoly::one());
    let (_, replacement) = solve_for(&relation, &pattern)?;
    trace.push(format!(
        "rule: {} ↦ {}",
        cycle::render(ctx, &pattern),
        cycle::render(ctx, &replacement)
    ));
    // K = -c₁(T_C), then the derived value of c₁(T_C).
    let canonical: Vec<(FormalPoly, FormalClass)> = top
        .rhs
        .terms()
        .iter()
        .map(|(m, c)| (c.neg(), m.blocks()[0].class.clone()))
        .collect();
    let k_value = canonical
        .iter()
        .map(|(c, cls)| cycle::monomial(ctx, 1, vec![(vec![0], cls.clone())], c.clone()))
        .fold(Cycle::zero(1), |a, b| a.add(&b));
    trace.push(format!(
        "rule: K = -c₁(T_C) ↦ {}",
        cycle::render(ctx, &k_value)
    ));

    let lhs = cycle::monomial(
        ctx,
        2,
        vec![(vec![0], k.clone()), (vec![1], k.clone())],
        FormalPoly::one(),
    );
    let rhs = pattern.scaled(&ctx.evaluate(&k));
    let mut steps = 0;
    let diff = lhs.sub(&rhs);
    trace.push(format!("check: {} = 0", cycle::render(ctx, &diff)));
    let stage = rewrite_monomial(&diff, &pattern, &replacement, &mut steps)?;
    trace.push(format!("  diagonal rule: {}", cycle::render(ctx, &stage)));
    let stage = substitute(ctx, &stage, Generator::Canonical, &canonical, &mut steps)?;
    trace.push(format!("  canonical rule: {}", cycle::render(ctx, &stage)));
    if !stage.is_zero() {
        return Err(MotiveError::Underived(format!(
            "Faber–Pandharipande check leaves {}",
            cycle::render(ctx, &stage)
        )));
    }
    Ok(DerivedIdentity {
        name: "Faber–Pandharipande".into(),
        lhs,
        rhs,
        trace,
    })
}

/// D·D′ = deg(D·D′)·z, from Γ₃ acting on D×D′.
fn derive_divisor_product(ctx: &Gamma3Context) -> Result<DerivedIdentity, MotiveError> {
    let mut trace = Vec::new();
    let dd = cycle::monomial(
        ctx,
        2,
        vec![
            (vec![0], class_of(Generator::DivisorA)),
            (vec![1], class_of(Generator::DivisorB)),
        ],
        FormalPoly::one(),
    );
    let relation = act_traced(ctx, &dd, &[0, 1], &[2], "D×D′", &mut trace)?;
    let mut prod = class_of(Generator::DivisorA);
    prod.insert(Generator::DivisorB, 1);
    let target = cycle::monomial(ctx, 1, vec![(vec![0], prod)], FormalPoly::one());
    let (lhs, rhs) = solve_for(&relation, &target)?;
    Ok(DerivedIdentity {
        name: "D·D′".into(),
        lhs,
        rhs,
        trace,
    })
}

/// The identities that follow from Γ₃ = 0.
pub fn gamma3_consequences(ctx: &Gamma3Context) -> Result<Vec<DerivedIdentity>, MotiveError> {
    let top = derive_top_chern(ctx)?;
    match ctx.kind {
        VarietyKind::Curve { .. } => {
            let fp = derive_faber_pandharipande(ctx, &top)?;
            Ok(vec![top, fp])
        }
        VarietyKind::Surface => Ok(vec![derive_divisor_product(ctx)?, top]),
    }
}

/// Values of generators and symbols in a concrete model.
#[derive(Debug, Clone)]
pub struct Assignment {
    pub classes: BTreeMap<Generator, Vec<Scalar>>,
    pub symbols: BTreeMap<String, Scalar>,
}

impl Assignment {
    /// A curve of the given genus: z = pt.
    pub fn curve(model: &CohModel, genus: u32) -> Self {
        let pt = model.basis_vector(model.size() - 1);
        let k = 2 * genus as i64 - 2;
        let scale = |v: &[Scalar], c: i64| v.iter().map(|x| x * int(c)).collect::<Vec<_>>();
        let mut classes = BTreeMap::new();
        classes.insert(Generator::Point, pt.clone());
        classes.insert(Generator::TopChern, scale(&pt, -k));
        classes.insert(Generator::Canonical, scale(&pt, k));
        let mut symbols = BTreeMap::new();
        symbols.insert("g".into(), int(genus as i64));
        Assignment { classes, symbols }
    }

    /// A cubic surface: z = h²/3, K = -h, D = h, D′ = 2h.
    pub fn cubic_surface(model: &CohModel) -> Self {
        let h = model.basis_vector(1);
        let h2 = model.basis_vector(2);
        let scale = |v: &[Scalar], c: Scalar| v.iter().map(|x| x * &c).collect::<Vec<_>>();
        let chi = int(model.euler_characteristic());
        let mut classes = BTreeMap::new();
        classes.insert(Generator::Point, scale(&h2, int(1) / int(3)));
        classes.insert(Generator::TopChern, scale(&h2, &chi / int(3)));
        classes.insert(Generator::Canonical, scale(&h, int(-1)));
        classes.insert(Generator::DivisorA, h.clone());
        classes.insert(Generator::DivisorB, scale(&h, int(2)));
        let mut symbols = BTreeMap::new();
        symbols.insert("χ_top".into(), chi);
        symbols.insert("deg(D·D′)".into(), int(6));
        Assignment { classes, symbols }
    }

    fn class_vector(&self, model: &CohModel, c: &FormalClass) -> Vec<Scalar> {
        let mut v = model.basis_vector(model.unit());
        for (g, e) in c {
            let x = self
                .classes
                .get(g)
                .cloned()
                .unwrap_or_else(|| vec![int(0); model.size()]);
            for _ in 0..*e {
                v = model.multiply(&v, &x);
            }
        }
        v
    }

    pub fn realize(&self, model: &CohModel, c: &FormalCycle) -> Result<Tensor, MotiveError> {
        for k in c.terms().values() {
            if k.evaluate(&self.symbols).is_none() {
                return Err(MotiveError::Underived(format!(
                    "no value for a symbol in {k}"
                )));
            }
        }
        Ok(cycle::realize::<Gamma3Context>(
            model,
            c,
            |cls| self.class_vector(model, cls),
            |k| k.evaluate(&self.symbols).unwrap_or_else(|| int(0)),
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelValidation {
    pub gamma3_vanishes: bool,
    pub identities: Vec<(String, bool)>,
}

impl ModelValidation {
    pub fn holds(&self) -> bool {
        self.gamma3_vanishes && self.identities.iter().all(|(_, ok)| *ok)
    }
}

/// Realizes Γ₃ and every derived identity in a concrete model.
pub fn validate_in_model(
    ctx: &Gamma3Context,
    model: &CohModel,
    assignment: &Assignment,
) -> Result<ModelValidation, MotiveError> {
    let g = assignment.realize(model, &gamma3(ctx).to_cycle())?;
    let mut identities = Vec::new();
    for id in gamma3_consequences(ctx)? {
        let diff = assignment.realize(model, &id.lhs.sub(&id.rhs))?;
        identities.push((id.statement(ctx), diff.is_zero()));
    }
    Ok(ModelValidation {
        gamma3_vanishes: g.is_zero(),
        identities,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seven_terms() {
        let ctx = Gamma3Context::curve();
        let g = gamma3(&ctx);
        assert_eq!(g.signs(), vec![1, -1, -1, -1, 1, 1, 1]);
        assert_eq!(
            g.render(&ctx),
            "δ - Δ₁₂·p₃*z - Δ₁₃·p₂*z - Δ₂₃·p₁*z + p₁*z·p₂*z + p₁*z·p₃*z + p₂*z·p₃*z"
        );
        for ctx in [Gamma3Context::curve(), Gamma3Context::surface()] {
            assert!(gamma3_pushforwards(&ctx).iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn curve_identities() {
        let ctx = Gamma3Context::curve();
        let ids = gamma3_consequences(&ctx).unwrap();
        assert_eq!(ids[0].statement(&ctx), "c₁(T_C) = (2 - 2g)·z");
        assert_eq!(ids[1].statement(&ctx), "p₁*K·p₂*K = (2g - 2)·p₁*K·Δ");
        let ctx2 = Gamma3Context::curve_of_genus(2);
        assert_eq!(
            gamma3_consequences(&ctx2).unwrap()[0].statement(&ctx2),
            "c₁(T_C) = -2·z"
        );
    }

    #[test]
    fn surface_identities() {
        let ctx = Gamma3Context::surface();
        let ids = gamma3_consequences(&ctx).unwrap();
        assert_eq!(ids[0].statement(&ctx), "D·D′ = deg(D·D′)·z");
        assert_eq!(ids[1].statement(&ctx), "c₂(T_S) = χ_top·z");
    }

    #[test]
    fn numerical_validation() {
        for genus in 0..=2 {
            let model = CohModel::curve(genus as usize).unwrap();
            let v = validate_in_model(
                &Gamma3Context::curve(),
                &model,
                &Assignment::curve(&model, genus),
            )
            .unwrap();
            assert!(v.holds(), "genus {genus}: {v:?}");
        }
        let model = CohModel::cubic(2).unwrap();
        let v = validate_in_model(
            &Gamma3Context::surface(),
            &model,
            &Assignment::cubic_surface(&model),
        )
        .unwrap();
        assert!(v.holds(), "{v:?}");
    }
}
