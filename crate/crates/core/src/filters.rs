//! Necessary conditions on crossing sets, canonical forms, and enumeration
//! of candidate classes for paths and cycles.
//!
//! Each rule is written once in its standard labeling and checked under every
//! automorphism of the family (and, for the sub-path rules, every window of
//! consecutive edges). Violations are reported in the tested set's labels.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{CrossingPair, CrossingSet, EdgeAction, EdgeId, FamilyKind, GraphFamily, VertexPermutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FilterError {
    #[error("rule does not apply to {0}")]
    FamilyNotSupported(GraphFamily),
    #[error("{0} has {1} candidate pairs; enumeration is limited to paths and cycles with n <= 8")]
    UniverseTooLarge(GraphFamily, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    P5Rule,
    P6Rule,
    InsideOutside,
    /// Part 1..=5 of the six-cycle rules.
    C6Rule(u8),
    EvenCycleRule,
    MaxCrossingBound,
}

/// A rule whose premise holds in some relabeling of the tested set while the
/// conclusion fails.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FilterViolation {
    pub rule: Rule,
    /// Automorphism taking the tested labeling to the rule's labeling.
    pub window: VertexPermutation,
    /// Premise pairs, all members of the tested set.
    pub premise: Vec<CrossingPair>,
    /// Pairs of which at least one is required, or the single forbidden pair.
    pub implicated: Vec<CrossingPair>,
}

/// Precomputed automorphism actions of a family.
pub struct Symmetry {
    family: GraphFamily,
    perms: Vec<VertexPermutation>,
    actions: Vec<EdgeAction>,
    inverse_actions: Vec<EdgeAction>,
}

impl Symmetry {
    pub fn new(family: GraphFamily) -> Self {
        let perms: Vec<VertexPermutation> = family.automorphisms().collect();
        let actions = perms
            .iter()
            .map(|p| family.induced_edge_action(p).expect("automorphism"))
            .collect();
        let inverse_actions = perms
            .iter()
            .map(|p| family.induced_edge_action(&p.inverse()).expect("automorphism"))
            .collect();
        Symmetry { family, perms, actions, inverse_actions }
    }

    pub fn family(&self) -> GraphFamily {
        self.family
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn perms(&self) -> &[VertexPermutation] {
        &self.perms
    }

    pub fn actions(&self) -> &[EdgeAction] {
        &self.actions
    }

    /// Lexicographic minimum of the orbit of `x`.
    pub fn canonical_form(&self, x: &CrossingSet) -> CrossingSet {
        let mut best = x.clone();
        for a in &self.actions {
            let y = a.apply_set(x);
            if y < best {
                best = y;
            }
        }
        best
    }

    /// Canonical form plus an automorphism taking `x` to it.
    pub fn canonical_with_map(&self, x: &CrossingSet) -> (CrossingSet, VertexPermutation) {
        let mut best = x.clone();
        let mut arg = VertexPermutation::identity(self.family.n());
        for (p, a) in self.perms.iter().zip(&self.actions) {
            let y = a.apply_set(x);
            if y < best {
                best = y;
                arg = p.clone();
            }
        }
        (best, arg)
    }
}

pub fn canonical_form(x: &CrossingSet, family: &GraphFamily) -> CrossingSet {
    Symmetry::new(*family).canonical_form(x)
}

/// Upper bound on crossings of any drawing of the family.
pub fn max_crossing_bound(family: &GraphFamily) -> usize {
    let n = family.n();
    match family.kind() {
        FamilyKind::Path => {
            if n < 4 {
                0
            } else {
                (n - 2) * (n - 3) / 2
            }
        }
        FamilyKind::Cycle => {
            if n % 2 == 1 {
                n * (n - 3) / 2
            } else {
                n * (n - 4) / 2 + 1
            }
        }
        FamilyKind::Clique => {
            if n < 4 {
                0
            } else {
                n * (n - 1) * (n - 2) * (n - 3) / 24
            }
        }
    }
}

/// A necessary condition on crossing sets.
pub trait CrossingRule: Send + Sync {
    fn rule(&self) -> Rule;

    fn applies(&self, family: &GraphFamily) -> bool;

    /// Violations of the rule; empty means the set passes.
    fn violations(&self, sym: &Symmetry, x: &CrossingSet) -> Vec<FilterViolation>;

    /// True if every superset of a violating set also violates, so the rule
    /// may prune during subset growth.
    fn is_monotone(&self) -> bool {
        false
    }
}

enum Conclusion {
    /// At least one of these pairs must be present.
    RequireAny(&'static [(usize, usize)]),
    /// This pair must be absent.
    Forbid((usize, usize)),
}

/// A premise/conclusion rule stated on consecutive edges `e_1, e_2, ...`,
/// shifted along every window of `span` edges.
struct PatternRule {
    rule: Rule,
    premise: Vec<(usize, usize)>,
    conclusion: Conclusion,
    span: usize,
    applies: fn(&GraphFamily) -> bool,
}

impl PatternRule {
    fn windows(&self, family: &GraphFamily) -> usize {
        let m = family.edge_count();
        match family.kind() {
            // the automorphism loop already covers every rotation
            FamilyKind::Cycle => 1,
            _ => m + 1 - self.span,
        }
    }
}

fn pair_in(action: &EdgeAction, shift: usize, (a, b): (usize, usize)) -> CrossingPair {
    let e = action.apply(EdgeId::from_index(a - 1 + shift));
    let f = action.apply(EdgeId::from_index(b - 1 + shift));
    CrossingPair::new(e, f)
}

impl CrossingRule for PatternRule {
    fn rule(&self) -> Rule {
        self.rule
    }

    fn applies(&self, family: &GraphFamily) -> bool {
        (self.applies)(family)
    }

    fn is_monotone(&self) -> bool {
        matches!(self.conclusion, Conclusion::Forbid(_))
    }

    fn violations(&self, sym: &Symmetry, x: &CrossingSet) -> Vec<FilterViolation> {
        let family = sym.family();
        let mut out = Vec::new();
        for (k, inv) in sym.inverse_actions.iter().enumerate() {
            for shift in 0..self.windows(&family) {
                // a rule-labeled pair, pulled back into the tested labeling
                let premise: Vec<CrossingPair> =
                    self.premise.iter().map(|&p| pair_in(inv, shift, p)).collect();
                if !premise.iter().all(|p| x.contains(p.0, p.1)) {
                    continue;
                }
                let failed = match self.conclusion {
                    Conclusion::RequireAny(req) => {
                        let implicated: Vec<CrossingPair> =
                            req.iter().map(|&p| pair_in(inv, shift, p)).collect();
                        (!implicated.iter().any(|p| x.contains(p.0, p.1))).then_some(implicated)
                    }
                    Conclusion::Forbid(f) => {
                        let p = pair_in(inv, shift, f);
                        x.contains(p.0, p.1).then(|| vec![p])
                    }
                };
                if let Some(implicated) = failed {
                    let mut premise = premise;
                    premise.sort_unstable();
                    out.push(FilterViolation {
                        rule: self.rule,
                        window: sym.perms[k].clone(),
                        premise,
                        implicated,
                    });
                }
            }
        }
        dedup_violations(out)
    }
}

fn dedup_violations(mut v: Vec<FilterViolation>) -> Vec<FilterViolation> {
    v.sort_by(|a, b| (a.rule, &a.premise, &a.implicated).cmp(&(b.rule, &b.premise, &b.implicated)));
    v.dedup_by(|a, b| a.rule == b.rule && a.premise == b.premise && a.implicated == b.implicated);
    v
}

/// Two interleaved crossings `e_i × e_k`, `e_j × e_l` (`i < j < k < l`) in a
/// cycle force a further crossing `e_a × e_b` with `a` in the cyclic interval
/// `[i, k]` and `b` in `[k, i]`.
struct InsideOutside;

fn in_cyclic(v: usize, from: usize, to: usize) -> bool {
    if from <= to {
        from <= v && v <= to
    } else {
        v >= from || v <= to
    }
}

impl CrossingRule for InsideOutside {
    fn rule(&self) -> Rule {
        Rule::InsideOutside
    }

    fn applies(&self, family: &GraphFamily) -> bool {
        family.kind() == FamilyKind::Cycle && family.n() >= 5
    }

    fn violations(&self, sym: &Symmetry, x: &CrossingSet) -> Vec<FilterViolation> {
        let mut out = Vec::new();
        for (k_aut, act) in sym.actions.iter().enumerate() {
            let y = act.apply_set(x);
            let inv = &sym.inverse_actions[k_aut];
            let back = |p: &CrossingPair| CrossingPair::new(inv.apply(p.0), inv.apply(p.1));
            let idx = |p: &CrossingPair| (p.0.index() + 1, p.1.index() + 1);
            for p in y.iter() {
                let (i, k) = idx(p);
                for q in y.iter() {
                    let (j, l) = idx(q);
                    if !(i < j && j < k && k < l) {
                        continue;
                    }
                    let found = y.iter().any(|r| {
                        if r == p || r == q {
                            return false;
                        }
                        let (a, b) = idx(r);
                        (in_cyclic(a, i, k) && in_cyclic(b, k, i)) || (in_cyclic(b, i, k) && in_cyclic(a, k, i))
                    });
                    if !found {
                        let mut premise = vec![back(p), back(q)];
                        premise.sort_unstable();
                        out.push(FilterViolation {
                            rule: Rule::InsideOutside,
                            window: sym.perms[k_aut].clone(),
                            premise,
                            implicated: Vec::new(),
                        });
                    }
                }
            }
        }
        dedup_violations(out)
    }
}

struct MaxBound;

impl CrossingRule for MaxBound {
    fn rule(&self) -> Rule {
        Rule::MaxCrossingBound
    }

    fn applies(&self, _family: &GraphFamily) -> bool {
        true
    }

    fn is_monotone(&self) -> bool {
        true
    }

    fn violations(&self, sym: &Symmetry, x: &CrossingSet) -> Vec<FilterViolation> {
        if x.len() <= max_crossing_bound(&sym.family()) {
            return Vec::new();
        }
        vec![FilterViolation {
            rule: Rule::MaxCrossingBound,
            window: VertexPermutation::identity(sym.family().n()),
            premise: x.pairs().to_vec(),
            implicated: Vec::new(),
        }]
    }
}

fn path_or_cycle_at_least(family: &GraphFamily, n: usize) -> bool {
    family.kind() != FamilyKind::Clique && family.n() >= n
}

pub fn p5_rule() -> Box<dyn CrossingRule> {
    Box::new(PatternRule {
        rule: Rule::P5Rule,
        premise: vec![(1, 3), (2, 4)],
        conclusion: Conclusion::RequireAny(&[(1, 4)]),
        span: 4,
        applies: |f| path_or_cycle_at_least(f, 5),
    })
}

pub fn p6_rule() -> Box<dyn CrossingRule> {
    Box::new(PatternRule {
        rule: Rule::P6Rule,
        premise: vec![(1, 3), (1, 4), (1, 5), (2, 5), (3, 5)],
        conclusion: Conclusion::RequireAny(&[(2, 4)]),
        span: 5,
        applies: |f| path_or_cycle_at_least(f, 6),
    })
}

fn is_c6(f: &GraphFamily) -> bool {
    f.kind() == FamilyKind::Cycle && f.n() == 6
}

/// Parts 1 to 5 of the six-cycle rules.
pub fn c6_rules() -> Vec<Box<dyn CrossingRule>> {
    let mk = |part: u8, premise: Vec<(usize, usize)>, conclusion: Conclusion| -> Box<dyn CrossingRule> {
        Box::new(PatternRule { rule: Rule::C6Rule(part), premise, conclusion, span: 6, applies: is_c6 })
    };
    vec![
        mk(1, vec![(1, 3), (1, 4), (1, 5)], Conclusion::Forbid((2, 6))),
        mk(2, vec![(1, 3), (1, 4), (1, 5), (2, 4), (4, 6)], Conclusion::RequireAny(&[(2, 5)])),
        mk(3, vec![(1, 3), (1, 4), (2, 4), (2, 5)], Conclusion::RequireAny(&[(1, 5), (3, 5), (3, 6)])),
        mk(4, vec![(1, 3), (1, 4), (2, 5), (4, 6)], Conclusion::RequireAny(&[(2, 4), (3, 5), (3, 6)])),
        mk(
            5,
            vec![(1, 3), (1, 4), (2, 5), (3, 6)],
            Conclusion::RequireAny(&[(2, 4), (2, 6), (3, 5), (4, 6)]),
        ),
    ]
}

/// In an even cycle, `e_1` crossing every edge `e_3..e_{n-1}` forbids `e_2 × e_n`.
struct EvenCycle;

impl CrossingRule for EvenCycle {
    fn rule(&self) -> Rule {
        Rule::EvenCycleRule
    }

    fn applies(&self, family: &GraphFamily) -> bool {
        family.kind() == FamilyKind::Cycle && family.n().is_multiple_of(2)
    }

    fn is_monotone(&self) -> bool {
        true
    }

    fn violations(&self, sym: &Symmetry, x: &CrossingSet) -> Vec<FilterViolation> {
        let n = sym.family().n();
        let premise: Vec<(usize, usize)> = (3..n).map(|j| (1, j)).collect();
        let mut out = Vec::new();
        for (k, inv) in sym.inverse_actions.iter().enumerate() {
            let pulled: Vec<CrossingPair> = premise.iter().map(|&p| pair_in(inv, 0, p)).collect();
            if !pulled.iter().all(|p| x.contains(p.0, p.1)) {
                continue;
            }
            let forbidden = pair_in(inv, 0, (2, n));
            if x.contains(forbidden.0, forbidden.1) {
                let mut premise = pulled;
                premise.sort_unstable();
                out.push(FilterViolation {
                    rule: Rule::EvenCycleRule,
                    window: sym.perms[k].clone(),
                    premise,
                    implicated: vec![forbidden],
                });
            }
        }
        dedup_violations(out)
    }
}

pub fn inside_outside_rule() -> Box<dyn CrossingRule> {
    Box::new(InsideOutside)
}

pub fn even_cycle_rule() -> Box<dyn CrossingRule> {
    Box::new(EvenCycle)
}

pub fn max_bound_rule() -> Box<dyn CrossingRule> {
    Box::new(MaxBound)
}

/// Every rule known to the crate. New rules are added here and picked up by
/// enumeration without further changes.
pub fn default_registry() -> Vec<Box<dyn CrossingRule>> {
    let mut rules = vec![p5_rule(), p6_rule(), inside_outside_rule()];
    rules.extend(c6_rules());
    rules.push(even_cycle_rule());
    rules.push(max_bound_rule());
    rules
}

fn run_single(
    rule: Box<dyn CrossingRule>,
    x: &CrossingSet,
    family: &GraphFamily,
) -> Result<Vec<FilterViolation>, FilterError> {
    if !rule.applies(family) {
        return Err(FilterError::FamilyNotSupported(*family));
    }
    Ok(rule.violations(&Symmetry::new(*family), x))
}

pub fn check_p5_rule(x: &CrossingSet, family: &GraphFamily) -> Result<Vec<FilterViolation>, FilterError> {
    run_single(p5_rule(), x, family)
}

pub fn check_p6_rule(x: &CrossingSet, family: &GraphFamily) -> Result<Vec<FilterViolation>, FilterError> {
    run_single(p6_rule(), x, family)
}

pub fn check_inside_outside(x: &CrossingSet, family: &GraphFamily) -> Result<Vec<FilterViolation>, FilterError> {
    run_single(inside_outside_rule(), x, family)
}

pub fn check_even_cycle_rule(x: &CrossingSet, family: &GraphFamily) -> Result<Vec<FilterViolation>, FilterError> {
    if family.kind() != FamilyKind::Cycle || family.n() % 2 == 1 || family.n() < 4 {
        return Err(FilterError::FamilyNotSupported(*family));
    }
    run_single(even_cycle_rule(), x, family)
}

pub fn check_c6_rules(x: &CrossingSet, family: &GraphFamily) -> Result<Vec<FilterViolation>, FilterError> {
    if !is_c6(family) {
        return Err(FilterError::FamilyNotSupported(*family));
    }
    let sym = Symmetry::new(*family);
    Ok(c6_rules().iter().flat_map(|r| r.violations(&sym, x)).collect())
}

/// All violations of the applicable rules in `rules`.
pub fn check_all(rules: &[Box<dyn CrossingRule>], sym: &Symmetry, x: &CrossingSet) -> Vec<FilterViolation> {
    let family = sym.family();
    rules
        .iter()
        .filter(|r| r.applies(&family))
        .flat_map(|r| r.violations(sym, x))
        .collect()
}

/// Largest universe accepted by [`enumerate_candidate_classes`].
pub const MAX_ENUMERATION_N: usize = 8;

/// Canonical crossing sets of the family passing every registered rule,
/// sorted by size then lexicographically.
pub fn enumerate_candidate_classes(family: &GraphFamily) -> Result<Vec<CrossingSet>, FilterError> {
    enumerate_with_rules(family, &default_registry())
}

/// As [`enumerate_candidate_classes`] with an explicit rule list.
pub fn enumerate_with_rules(
    family: &GraphFamily,
    rules: &[Box<dyn CrossingRule>],
) -> Result<Vec<CrossingSet>, FilterError> {
    if family.kind() == FamilyKind::Clique {
        return Err(FilterError::FamilyNotSupported(*family));
    }
    let universe = family.candidate_crossing_pairs();
    if family.n() > MAX_ENUMERATION_N {
        return Err(FilterError::UniverseTooLarge(*family, universe.len()));
    }
    let sym = Symmetry::new(*family);
    let active: Vec<&dyn CrossingRule> = rules.iter().filter(|r| r.applies(family)).map(|r| r.as_ref()).collect();
    let monotone: Vec<&dyn CrossingRule> = active.iter().copied().filter(|r| r.is_monotone()).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    grow(&sym, &universe, 0, &mut chosen, &active, &monotone, &mut out);
    out.sort_by(|a: &CrossingSet, b| (a.len(), a).cmp(&(b.len(), b)));
    Ok(out)
}

fn grow(
    sym: &Symmetry,
    universe: &[CrossingPair],
    next: usize,
    chosen: &mut Vec<CrossingPair>,
    active: &[&dyn CrossingRule],
    monotone: &[&dyn CrossingRule],
    out: &mut Vec<CrossingSet>,
) {
    let x = CrossingSet::from_sorted_pairs(chosen.clone());
    if !chosen.is_empty() && monotone.iter().any(|r| !r.violations(sym, &x).is_empty()) {
        return;
    }
    if next == universe.len() {
        if sym.canonical_form(&x) == x && active.iter().all(|r| r.violations(sym, &x).is_empty()) {
            out.push(x);
        }
        return;
    }
    grow(sym, universe, next + 1, chosen, active, monotone, out);
    chosen.push(universe[next]);
    grow(sym, universe, next + 1, chosen, active, monotone, out);
    chosen.pop();
}

/// Ids of the form `c.k`: crossing count, then 1-based position among the
/// classes with that count, in the given order.
pub fn assign_ids(classes: &[CrossingSet]) -> Vec<String> {
    let mut out = Vec::with_capacity(classes.len());
    let mut last = usize::MAX;
    let mut k = 0;
    for x in classes {
        if x.len() != last {
            last = x.len();
            k = 0;
        }
        k += 1;
        out.push(alloc::format!("{}.{}", x.len(), k));
    }
    out
}
