//! Executable checks of the structural bound and equivalence facts this
//! crate is built around. Each check rebuilds, on a concrete finite monoid,
//! the witness objects the corresponding argument manipulates — generating
//! sets, kernel left ideals, idempotent products, quotient acts — and then
//! *measures* every claimed diameter with the metric module's BFS. No bound
//! is assumed anywhere: a report passes only if the measured value satisfies
//! the claimed inequality, so every `pass == false` is either a bug or a
//! genuine counterexample.

use serde::Serialize;

use crate::acts;
use crate::constructions::{self, ConstructionError, ExtensionSpec};
use crate::fixtures;
use crate::metric::{self, GenSet};
use crate::semigroup::{ElementId, FiniteSemigroup};
use crate::structure::kernel::{kernel, minimal_one_sided_ideals, KernelData, Side};
use crate::structure::predicates::{
    band_decomposition, has_zero, left_compatibility_counterexample, local_zeros,
    predicates_with_green,
};
use crate::structure::{green, GreenData, Preorder};
use crate::util;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckStatus {
    /// The check ran and `pass` reflects its outcome.
    Checked,
    /// The instance does not meet the check's hypotheses; `pass` is true and
    /// nothing was measured.
    NotApplicable,
}

/// A named element set produced while running a check (a generating set, an
/// ideal, a set of idempotent products, ...). Elements are indices into the
/// semigroup named by the report's instance tag unless the trace says
/// otherwise.
#[derive(Debug, Clone, Serialize)]
pub struct NamedSet {
    pub name: String,
    pub elements: Vec<ElementId>,
}

/// Outcome of one check on one instance. For bound checks, `pass` means
/// `measured <= claimed_bound` (with `measured == -1` encoding an infinite
/// or unobtainable value, which always fails). For equivalence checks the
/// bound is 0 and `measured` counts violations.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub theorem_id: &'static str,
    pub instance: String,
    pub status: CheckStatus,
    pub witnesses: Vec<NamedSet>,
    pub claimed_bound: i64,
    pub measured: i64,
    pub pass: bool,
    pub trace: Vec<String>,
}

impl WitnessReport {
    fn not_applicable(theorem_id: &'static str, instance: String, why: &str) -> Self {
        WitnessReport {
            theorem_id,
            instance,
            status: CheckStatus::NotApplicable,
            witnesses: Vec::new(),
            claimed_bound: 0,
            measured: 0,
            pass: true,
            trace: vec![why.to_string()],
        }
    }

    fn failed(theorem_id: &'static str, instance: String, why: String) -> Self {
        WitnessReport {
            theorem_id,
            instance,
            status: CheckStatus::Checked,
            witnesses: Vec::new(),
            claimed_bound: 0,
            measured: -1,
            pass: false,
            trace: vec![why],
        }
    }

    pub fn witness(&self, name: &str) -> Option<&[ElementId]> {
        self.witnesses
            .iter()
            .find(|w| w.name == name)
            .map(|w| w.elements.as_slice())
    }
}

fn instance_tag(s: &FiniteSemigroup) -> String {
    format!("order {} / table {:016x}", s.order(), s.table_hash())
}

fn labels_of(s: &FiniteSemigroup, set: &[ElementId]) -> String {
    set.iter().map(|&a| s.label(a)).collect::<Vec<_>>().join(", ")
}

fn dia(d: Option<u32>) -> i64 {
    d.map_or(-1, |v| v as i64)
}

struct KernelCtx {
    g: GreenData,
    kd: KernelData,
    /// Least-index idempotent of the kernel.
    e: ElementId,
}

fn kernel_ctx(s: &FiniteSemigroup) -> Result<KernelCtx, String> {
    let g = green(s);
    let kd = kernel(s, &g).map_err(|e| e.to_string())?;
    let e = kd
        .rees
        .as_ref()
        .map(|r| r.idempotent)
        .ok_or_else(|| "kernel decomposition unavailable".to_string())?;
    Ok(KernelCtx { g, kd, e })
}

// ---------------------------------------------------------------------------
// Kernel transport of generating sets (the completely-simple-minimal-ideal
// chain). Stage one moves a congruence generating set X of the monoid into
// a left ideal of the kernel; stage two compresses it into the maximal
// subgroup; stage three expands back to an R-class of the kernel.
// ---------------------------------------------------------------------------

struct KernelStage {
    x_aug: Vec<ElementId>,
    /// X-diameter of the monoid.
    n: u32,
    /// eX.
    v: Vec<ElementId>,
    /// Union of the L-classes of eX: a left ideal of the kernel.
    k0: Vec<ElementId>,
    /// Idempotents of K0 in the R-class of e.
    er: Vec<ElementId>,
    /// V u er: with the formal identity, a generating set for K0 + 1.
    y_kernel: Vec<ElementId>,
}

fn build_kernel_stage(
    s: &FiniteSemigroup,
    ctx: &KernelCtx,
    x: &[ElementId],
    trace: &mut Vec<String>,
) -> Result<KernelStage, String> {
    let e = ctx.e;
    let mut x_aug = util::sorted_dedup(x);
    if let Some(&bad) = x_aug.iter().find(|&&a| a >= s.order()) {
        return Err(format!("generator index {bad} out of range"));
    }
    if x_aug.binary_search(&e).is_err() {
        x_aug.push(e);
        x_aug.sort_unstable();
        trace.push(format!(
            "kernel idempotent {} adjoined to the generating set",
            s.label(e)
        ));
    }
    let n_rep = metric::right_diameter_report(s, &GenSet::Symmetric(x_aug.clone()))
        .map_err(|err| err.to_string())?;
    let n = n_rep
        .diameter
        .ok_or_else(|| "X does not generate the universal right congruence".to_string())?;
    let v = util::sorted_dedup(&x_aug.iter().map(|&a| s.mul(e, a)).collect::<Vec<_>>());
    let mut k0: Vec<ElementId> = Vec::new();
    for &w in &v {
        k0.extend_from_slice(ctx.g.l.class(ctx.g.l.class_of(w)));
    }
    let k0 = util::sorted_dedup(&k0);
    let er: Vec<ElementId> = s
        .idempotents()
        .into_iter()
        .filter(|&f| k0.binary_search(&f).is_ok() && ctx.g.r.same(f, e))
        .collect();
    let mut y_kernel = v.clone();
    y_kernel.extend_from_slice(&er);
    let y_kernel = util::sorted_dedup(&y_kernel);
    trace.push(format!(
        "n = {n}, V = eX = {{{}}}, |K0| = {}",
        labels_of(s, &v),
        k0.len()
    ));
    Ok(KernelStage { x_aug, n, v, k0, er, y_kernel })
}

/// Y-diameter of the left ideal `k0` with an identity adjoined; the
/// generating set is `y_kernel` plus the adjoined identity.
fn k0_monoid_diameter(
    s: &FiniteSemigroup,
    k0: &[ElementId],
    y_kernel: &[ElementId],
) -> Result<Option<u32>, String> {
    let (sub, members) = s.subsemigroup(k0).map_err(|e| format!("K0 is not closed: {e}"))?;
    let with_one = sub.adjoin_identity();
    let mut y_idx: Vec<usize> = Vec::with_capacity(y_kernel.len() + 1);
    for y in y_kernel {
        let pos = members
            .binary_search(y)
            .map_err(|_| format!("Y element {} lies outside K0", s.label(*y)))?;
        y_idx.push(pos);
    }
    y_idx.push(sub.order()); // adjoined identity
    let rep = metric::right_diameter_report(&with_one, &GenSet::Symmetric(y_idx))
        .map_err(|err| err.to_string())?;
    Ok(rep.diameter)
}

struct GroupStage {
    group: FiniteSemigroup,
    members: Vec<ElementId>,
    /// e together with the two-sided e-conjugates of Y.
    f_set: Vec<ElementId>,
    /// Products fg of kernel idempotents with f in R_e and g in L_e.
    v_set: Vec<ElementId>,
    /// F u V as indices into `group`.
    fv_positions: Vec<usize>,
}

fn build_group_stage(
    s: &FiniteSemigroup,
    ctx: &KernelCtx,
    k0: &[ElementId],
    y_kernel: &[ElementId],
) -> Result<GroupStage, String> {
    let e = ctx.e;
    if k0.binary_search(&e).is_err() {
        return Err(format!("kernel idempotent {} is not in K0", s.label(e)));
    }
    let h = util::sorted_dedup(ctx.g.h.class(ctx.g.h.class_of(e)));
    let (group, members) = s
        .subsemigroup(&h)
        .map_err(|err| format!("H-class of e is not closed: {err}"))?;
    let mut f_set = vec![e];
    for &y in y_kernel {
        f_set.push(s.mul(s.mul(e, y), e));
    }
    let f_set = util::sorted_dedup(&f_set);
    let idems: Vec<ElementId> = s
        .idempotents()
        .into_iter()
        .filter(|&f| k0.binary_search(&f).is_ok())
        .collect();
    let mut v_set = Vec::new();
    for &f in idems.iter().filter(|&&f| ctx.g.r.same(f, e)) {
        for &gg in idems.iter().filter(|&&gg| ctx.g.l.same(gg, e)) {
            v_set.push(s.mul(f, gg));
        }
    }
    let v_set = util::sorted_dedup(&v_set);
    let mut fv = f_set.clone();
    fv.extend_from_slice(&v_set);
    let fv = util::sorted_dedup(&fv);
    let mut fv_positions = Vec::with_capacity(fv.len());
    for a in &fv {
        let pos = members
            .binary_search(a)
            .map_err(|_| format!("product {} escapes the maximal subgroup", s.label(*a)))?;
        fv_positions.push(pos);
    }
    Ok(GroupStage { group, members, f_set, v_set, fv_positions })
}

/// Transports a congruence generating set X of the monoid into the left
/// ideal K0 = L-classes of eX of the kernel and measures the induced
/// generating set Y = {1} u eX u (E(K0) n R_e) on K0 with an identity
/// adjoined: the measured diameter must stay within 2n + 3 for n = D(X, S).
pub fn check_csmi_2a(s: &FiniteSemigroup, x: &[ElementId]) -> WitnessReport {
    const ID: &str = "csmi-kernel-bound";
    let instance = instance_tag(s);
    if s.identity().is_none() {
        return WitnessReport::not_applicable(ID, instance, "requires a monoid");
    }
    let ctx = match kernel_ctx(s) {
        Ok(c) => c,
        Err(why) => return WitnessReport::failed(ID, instance, why),
    };
    let mut trace = Vec::new();
    let stage = match build_kernel_stage(s, &ctx, x, &mut trace) {
        Ok(st) => st,
        Err(why) => return WitnessReport::failed(ID, instance, why),
    };
    let measured = match k0_monoid_diameter(s, &stage.k0, &stage.y_kernel) {
        Ok(d) => d,
        Err(why) => return WitnessReport::failed(ID, instance, why),
    };
    let bound = 2 * stage.n as i64 + 3;
    trace.push(format!(
        "Y = {{1}} u {{{}}}; measured Y-diameter of K0+1 = {}",
        labels_of(s, &stage.y_kernel),
        dia(measured)
    ));
    let pass = measured.is_some_and(|m| (m as i64) <= bound);
    WitnessReport {
        theorem_id: ID,
        instance,
        status: CheckStatus::Checked,
        witnesses: vec![
            NamedSet { name: "X".into(), elements: stage.x_aug },
            NamedSet { name: "V".into(), elements: stage.v },
            NamedSet { name: "K0".into(), elements: stage.k0 },
            NamedSet { name: "E(K0)nR_e".into(), elements: stage.er },
            NamedSet { name: "Y".into(), elements: stage.y_kernel },
        ],
        claimed_bound: bound,
        measured: dia(measured),
        pass,
        trace,
    }
}

/// From a kernel left ideal K0 and a set Y generating the universal right
/// congruence of K0 + 1 (the formal identity is implicit), compresses the
/// generators into the maximal subgroup G = H_e: builds F = {e} u eYe and
/// V = {fg : f, g idempotents of K0, f R e, g L e} and measures the
/// (F u V)-diameter of G against 3n, n = D(Y, K0 + 1).
pub fn check_csmi_2to3(s: &FiniteSemigroup, k0: &[ElementId], y: &[ElementId]) -> WitnessReport {
    const ID: &str = "csmi-group-bound";
    let instance = instance_tag(s);
    if s.identity().is_none() {
        return WitnessReport::not_applicable(ID, instance, "requires a monoid");
    }
    let ctx = match kernel_ctx(s) {
        Ok(c) => c,
        Err(why) => return WitnessReport::failed(ID, instance, why),
    };
    let k0 = util::sorted_dedup(k0);
    let mut trace = Vec::new();
    let y_kernel: Vec<ElementId> = util::sorted_dedup(y)
        .into_iter()
        .filter(|a| k0.binary_search(a).is_ok())
        .collect();
    if y_kernel.len() != util::sorted_dedup(y).len() {
        trace.push("members of Y outside K0 are read as the adjoined identity".into());
    }
    let n = match k0_monoid_diameter(s, &k0, &y_kernel) {
        Ok(Some(n)) => n,
        Ok(None) => {
            return WitnessReport::failed(ID, instance, "Y does not generate on K0 + 1".into())
        }
        Err(why) => return WitnessReport::failed(ID, instance, why),
    };
    let stage = match build_group_stage(s, &ctx, &k0, &y_kernel) {
        Ok(st) => st,
        Err(why) => return WitnessReport::failed(ID, instance, why),
    };
    let rep = match metric::right_diameter_report(
        &stage.group,
        &GenSet::Symmetric(stage.fv_positions.clone()),
    ) {
        Ok(r) => r,
        Err(err) => return WitnessReport::failed(ID, instance, err.to_string()),
    };
    let bound = 3 * n as i64;
    trace.push(format!(
        "n = {n}; F = {{{}}}, V = {{{}}}, |G| = {}; measured (FuV)-diameter of G = {}",
        labels_of(s, &stage.f_set),
        labels_of(s, &stage.v_set),
        stage.group.order(),
        dia(rep.diameter)
    ));
    let pass = rep.diameter.is_some_and(|m| (m as i64) <= bound);
    WitnessReport {
        theorem_id: ID,
        instance,
        status: CheckStatus::Checked,
        witnesses: vec![
            NamedSet { name: "F".into(), elements: stage.f_set },
            NamedSet { name: "V".into(), elements: stage.v_set },
            NamedSet { name: "G".into(), elements: stage.members },
        ],
        claimed_bound: bound,
        measured: dia(rep.diameter),
        pass,
        trace,
    }
}

/// Expands a group generating set back out to the kernel R-class R = R_e:
/// with n the measured (F u V)-diameter of G and m the measured diameter of
/// the quotient act R/H (full carrier as generating set), the set
/// Z = F u (E(K0) n R) u {least representative of each H-class} must give
/// R a measured diameter of at most 2n(m + 1) + m.
pub fn check_csmi_3to1(s: &FiniteSemigroup) -> WitnessReport {
    const ID: &str = "csmi-rclass-bound";
    let instance = instance_tag(s);
    if s.identity().is_none() {
        return WitnessReport::not_applicable(ID, instance, "requires a monoid");
    }
    let ctx = match kernel_ctx(s) {
        Ok(c) => c,
        Err(why) => return WitnessReport::failed(ID, instance, why),
    };
    let mut trace = Vec::new();
    let all: Vec<ElementId> = s.elements().collect();
    let stage = match build_kernel_stage(s, &ctx, &all, &mut trace) {
        Ok(st) => st,
        Err(why) => return WitnessReport::failed(ID, instance, why),
    };
    let group_stage = match build_group_stage(s, &ctx, &stage.k0, &stage.y_kernel) {
        Ok(st) => st,
        Err(why) => return WitnessReport::failed(ID, instance, why),
    };
    let n = match metric::right_diameter_report(
        &group_stage.group,
        &GenSet::Symmetric(group_stage.fv_positions.clone()),
    ) {
        Ok(r) => match r.diameter {
            Some(n) => n,
            None => {
                return WitnessReport::failed(ID, instance, "F u V does not generate on G".into())
            }
        },
        Err(err) => return WitnessReport::failed(ID, instance, err.to_string()),
    };
    let r_class = util::sorted_dedup(ctx.g.r.class(ctx.g.r.class_of(ctx.e)));
    let (rh_act, rh_classes) = match acts::r_class_mod_h_act(s, &ctx.g, &r_class) {
        Ok(v) => v,
        Err(err) => return WitnessReport::failed(ID, instance, err.to_string()),
    };
    let full: Vec<usize> = rh_act.points().collect();
    let m = match metric::distance_matrix(&rh_act, &GenSet::Symmetric(full)) {
        Ok(r) => match r.diameter {
            Some(m) => m,
            None => return WitnessReport::failed(ID, instance, "R/H act is disconnected".into()),
        },
        Err(err) => return WitnessReport::failed(ID, instance, err.to_string()),
    };
    // Least-index representative of each H-class in R.
    let x_reps: Vec<ElementId> = rh_classes.iter().map(|c| c[0]).collect();
    let er_in_r: Vec<ElementId> = s
        .idempotents()
        .into_iter()
        .filter(|&f| {
            stage.k0.binary_search(&f).is_ok() && r_class.binary_search(&f).is_ok()
        })
        .collect();
    let mut z = group_stage.f_set.clone();
    z.extend_from_slice(&er_in_r);
    z.extend_from_slice(&x_reps);
    let z = util::sorted_dedup(&z);
    let (r_act, r_members) = match acts::act_of_right_ideal(s, &r_class) {
        Ok(v) => v,
        Err(err) => return WitnessReport::failed(ID, instance, err.to_string()),
    };
    let mut z_idx = Vec::with_capacity(z.len());
    for a in &z {
        match r_members.binary_search(a) {
            Ok(pos) => z_idx.push(pos),
            Err(_) => {
                return WitnessReport::failed(
                    ID,
                    instance,
                    format!("Z element {} lies outside R_e", s.label(*a)),
                )
            }
        }
    }
    let rep = match metric::distance_matrix(&r_act, &GenSet::Symmetric(z_idx)) {
        Ok(r) => r,
        Err(err) => return WitnessReport::failed(ID, instance, err.to_string()),
    };
    let bound = 2 * n as i64 * (m as i64 + 1) + m as i64;
    trace.push(format!(
        "n = {n} (group), m = {m} (R/H); Z = {{{}}}; measured Z-diameter of R_e = {}",
        labels_of(s, &z),
        dia(rep.diameter)
    ));
    let pass = rep.diameter.is_some_and(|d| (d as i64) <= bound);
    WitnessReport {
        theorem_id: ID,
        instance,
        status: CheckStatus::Checked,
        witnesses: vec![
            NamedSet { name: "Z".into(), elements: z },
            NamedSet { name: "F".into(), elements: group_stage.f_set },
            NamedSet { name: "V".into(), elements: group_stage.v_set },
            NamedSet { name: "X-reps".into(), elements: x_reps },
            NamedSet { name: "R_e".into(), elements: r_class },
        ],
        claimed_bound: bound,
        measured: dia(rep.diameter),
        pass,
        trace,
    }
}

/// Runs the three kernel-transport checks in sequence, feeding the left
/// ideal and generating set built by the first stage into the second.
pub fn csmi_chain(s: &FiniteSemigroup, x: &[ElementId]) -> Vec<WitnessReport> {
    let first = check_csmi_2a(s, x);
    if first.status == CheckStatus::NotApplicable || !first.pass {
        return vec![first];
    }
    let k0 = first.witness("K0").unwrap_or(&[]).to_vec();
    let y = first.witness("Y").unwrap_or(&[]).to_vec();
    let second = check_csmi_2to3(s, &k0, &y);
    let third = check_csmi_3to1(s);
    vec![first, second, third]
}

// ---------------------------------------------------------------------------
// Right reversibility: four finite characterisations that must agree.
// ---------------------------------------------------------------------------

/// Evaluates four conditions independently and asserts they agree:
/// (a) the monoid is right reversible (ua = vb always solvable);
/// (b) it has a finite absorbing set (witnessed by the kernel) and is right
///     reversible;
/// (c) the kernel is left simple — a left zero semigroup of groups, i.e. its
///     Rees decomposition has a single L-class and an all-identity sandwich;
/// (d) the monoid has exactly one minimal left ideal.
pub fn check_rr_equivalence(s: &FiniteSemigroup) -> WitnessReport {
    const ID: &str = "rr-equivalence";
    let instance = instance_tag(s);
    if s.identity().is_none() {
        return WitnessReport::not_applicable(ID, instance, "requires a monoid");
    }
    let ctx = match kernel_ctx(s) {
        Ok(c) => c,
        Err(why) => return WitnessReport::failed(ID, instance, why),
    };
    let b_rr = crate::structure::predicates::is_right_reversible(s);
    let kernel_absorbs = metric::is_absorbing_set(s, &ctx.kd.elements);
    let b_absorbed = kernel_absorbs && b_rr;
    let rees = ctx.kd.rees.as_ref();
    let left_simple = rees.is_some_and(|r| r.j_size == 1);
    let sandwich_trivial = rees.is_some_and(|r| {
        let e = r.group.identity().unwrap_or(0);
        r.p.iter().all(|row| row.iter().all(|&g| g == e))
    });
    let b_kernel = ctx.kd.is_completely_simple && left_simple && sandwich_trivial;
    let left_ideals = minimal_one_sided_ideals(s, &ctx.g, Side::Left);
    let b_unique = left_ideals.len() == 1;
    let flags = [b_rr, b_absorbed, b_kernel, b_unique];
    let disagreements = flags.iter().filter(|&&f| f != flags[0]).count() as i64;
    let mut trace = vec![format!(
        "conditions: rr={b_rr} absorbed+rr={b_absorbed} kernel-left-simple={b_kernel} unique-min-left-ideal={b_unique}"
    )];
    trace.push(format!(
        "kernel is an absorbing set: {kernel_absorbs}; minimal left ideals: {}",
        left_ideals.len()
    ));
    if b_kernel {
        if let Some(r) = rees {
            trace.push(format!(
                "kernel = left zero semigroup of {} copies of a group of order {}",
                r.i_size,
                r.group.order()
            ));
        }
    }
    WitnessReport {
        theorem_id: ID,
        instance,
        status: CheckStatus::Checked,
        witnesses: vec![NamedSet { name: "kernel".into(), elements: ctx.kd.elements.clone() }],
        claimed_bound: 0,
        measured: disagreements,
        pass: disagreements == 0,
        trace,
    }
}

// ---------------------------------------------------------------------------
// J-trivial monoids: derive the zero from local zeros along X-sequences.
// ---------------------------------------------------------------------------

/// For each element, walks a shortest X-sequence from the identity and
/// chains local zeros along it: e_1 = y_1*, e_{i+1} = (y_{i+1}* e_i)*,
/// where u* is the least-index local zero of u. Returns the final
/// idempotent for every element, each guaranteed J-below its element.
fn chained_local_zeros(
    s: &FiniteSemigroup,
    g: &GreenData,
    x: &[ElementId],
) -> Result<Vec<ElementId>, String> {
    let one = s.identity().ok_or("requires a monoid")?;
    let star = |u: ElementId| -> Result<ElementId, String> {
        local_zeros(s, u)
            .first()
            .copied()
            .ok_or_else(|| format!("element {} has no local zero", s.label(u)))
    };
    let act = acts::act_of_semigroup(s);
    let chains = metric::sequences_from(&act, &GenSet::Symmetric(x.to_vec()), one)
        .map_err(|e| e.to_string())?;
    let mut out = Vec::with_capacity(s.order());
    for a in s.elements() {
        let steps = chains[a]
            .as_ref()
            .ok_or_else(|| format!("X does not reach {}", s.label(a)))?;
        let mut e_cur = star(one)?;
        for (pos, step) in steps.iter().enumerate() {
            e_cur = if pos == 0 {
                star(step.y)?
            } else {
                star(s.mul(star(step.y)?, e_cur))?
            };
        }
        if !g.leq_j(e_cur, a) {
            return Err(format!(
                "chained idempotent {} is not J-below {}",
                s.label(e_cur),
                s.label(a)
            ));
        }
        out.push(e_cur);
    }
    Ok(out)
}

/// On a J-trivial monoid in which every element has a local zero, verifies
/// that a zero exists and re-derives it: the product of the distinct chained
/// idempotents (in index order) must equal the zero.
pub fn check_jtrivial_zero(s: &FiniteSemigroup) -> WitnessReport {
    const ID: &str = "jtrivial-zero";
    let instance = instance_tag(s);
    if s.identity().is_none() {
        return WitnessReport::not_applicable(ID, instance, "requires a monoid");
    }
    let g = green(s);
    if !g.j.is_trivial() {
        return WitnessReport::not_applicable(ID, instance, "not J-trivial");
    }
    if let Some(a) = s.elements().find(|&a| local_zeros(s, a).is_empty()) {
        return WitnessReport::not_applicable(
            ID,
            instance,
            &format!("element {} has no local zero", s.label(a)),
        );
    }
    let x: Vec<ElementId> = s.elements().collect();
    let per_element = match chained_local_zeros(s, &g, &x) {
        Ok(v) => v,
        Err(why) => return WitnessReport::failed(ID, instance, why),
    };
    let v_set = util::sorted_dedup(&per_element);
    let z = v_set[1..].iter().fold(v_set[0], |acc, &w| s.mul(acc, w));
    let is_zero = s.elements().all(|a| s.mul(z, a) == z && s.mul(a, z) == z);
    let declared = has_zero(s);
    let pass = is_zero && declared == Some(z);
    let trace = vec![
        format!("V = {{{}}}", labels_of(s, &v_set)),
        format!(
            "derived z = {} (zero scan: {})",
            s.label(z),
            declared.map_or("none".to_string(), |w| s.label(w))
        ),
    ];
    WitnessReport {
        theorem_id: ID,
        instance,
        status: CheckStatus::Checked,
        witnesses: vec![
            NamedSet { name: "V".into(), elements: v_set },
            NamedSet { name: "derived-zero".into(), elements: vec![z] },
        ],
        claimed_bound: 0,
        measured: i64::from(!pass),
        pass,
        trace,
    }
}

// ---------------------------------------------------------------------------
// Minimal ideal transport conditions.
// ---------------------------------------------------------------------------

/// With k the least element of the kernel (hence of some minimal left
/// ideal), checks exhaustively that u <=_L v forces auk <=_L avk and that
/// u <=_J v forces auk <=_J avk, for all a, u, v. When the left preorder is
/// left compatible, additionally verifies that the kernel is exactly the
/// union of the minimal left ideals.
pub fn check_min_ideal_conditions(s: &FiniteSemigroup) -> WitnessReport {
    const ID: &str = "min-ideal-conditions";
    let instance = instance_tag(s);
    if s.identity().is_none() {
        return WitnessReport::not_applicable(ID, instance, "requires a monoid");
    }
    let ctx = match kernel_ctx(s) {
        Ok(c) => c,
        Err(why) => return WitnessReport::failed(ID, instance, why),
    };
    let k = ctx.kd.elements[0];
    let mut violations: i64 = 0;
    let mut first: Option<String> = None;
    for u in s.elements() {
        for v in s.elements() {
            let le_l = ctx.g.leq_l(u, v);
            let le_j = ctx.g.leq_j(u, v);
            if !le_l && !le_j {
                continue;
            }
            for a in s.elements() {
                let auk = s.mul(s.mul(a, u), k);
                let avk = s.mul(s.mul(a, v), k);
                if le_l && !ctx.g.leq_l(auk, avk) {
                    violations += 1;
                    first.get_or_insert_with(|| {
                        format!(
                            "left: a={} u={} v={}",
                            s.label(a),
                            s.label(u),
                            s.label(v)
                        )
                    });
                }
                if le_j && !ctx.g.leq_j(auk, avk) {
                    violations += 1;
                    first.get_or_insert_with(|| {
                        format!("two-sided: a={} u={} v={}", s.label(a), s.label(u), s.label(v))
                    });
                }
            }
        }
    }
    let mut trace = vec![format!("k = {} (least kernel element)", s.label(k))];
    if let Some(w) = first {
        trace.push(format!("first violation: {w}"));
    }
    let mut union_ok = true;
    if left_compatibility_counterexample(s, &ctx.g, Preorder::L).is_none() {
        let mut union: Vec<ElementId> = Vec::new();
        for ideal in minimal_one_sided_ideals(s, &ctx.g, Side::Left) {
            union.extend_from_slice(&ideal);
        }
        let union = util::sorted_dedup(&union);
        union_ok = union == ctx.kd.elements;
        trace.push(format!(
            "left preorder is left compatible; kernel equals union of {} minimal left ideals: {}",
            minimal_one_sided_ideals(s, &ctx.g, Side::Left).len(),
            union_ok
        ));
    } else {
        trace.push("left preorder is not left compatible; union clause skipped".into());
    }
    let measured = violations + i64::from(!union_ok);
    WitnessReport {
        theorem_id: ID,
        instance,
        status: CheckStatus::Checked,
        witnesses: vec![NamedSet { name: "k".into(), elements: vec![k] }],
        claimed_bound: 0,
        measured,
        pass: measured == 0,
        trace,
    }
}

// ---------------------------------------------------------------------------
// Glued Rees extensions: the d + 2 bound on the distinguished right ideal.
// ---------------------------------------------------------------------------

/// An extension spec together with the data making the distinguished right
/// ideal measurable: a set X with T = T^1 X, a set J0 of J-indices whose
/// sandwich rows cover T, and a row j0 of X-entries.
#[derive(Debug, Clone)]
pub struct Con1Instance {
    pub spec: ExtensionSpec,
    /// Subset of T with T = T^1 X.
    pub x: Vec<ElementId>,
    /// J-indices whose sandwich rows cover all of T.
    pub j0_set: Vec<usize>,
    /// A member of `j0_set` whose whole row lies in X.
    pub j0: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum Con1Error {
    #[error("condition ({number}) fails: {detail}")]
    Condition { number: u8, detail: String },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Act(#[from] acts::ActError),
    #[error(transparent)]
    Metric(#[from] metric::MetricError),
}

/// The instance induced by [`constructions::e_of`]: X = {x} u Y^2 u Y^3,
/// J0 = {indices of Y} u {*}, j0 = * (the star row is constantly x).
pub fn con1_from_e_of(
    s: &FiniteSemigroup,
    x: ElementId,
    y: Option<&[ElementId]>,
) -> Result<Con1Instance, ConstructionError> {
    let spec = constructions::e_of_spec(s, x, y)?;
    let all: Vec<ElementId> = s.elements().collect();
    let y = util::sorted_dedup(y.unwrap_or(&all));
    let mut xs = vec![x];
    for &a in &y {
        for &b in &y {
            let ab = s.mul(a, b);
            xs.push(ab);
            for &c in &y {
                xs.push(s.mul(ab, c));
            }
        }
    }
    let mut j0_set: Vec<usize> = y.clone();
    j0_set.push(s.order()); // the star index
    Ok(Con1Instance { spec, x: util::sorted_dedup(&xs), j0_set, j0: s.order() })
}

/// Verifies the four hypotheses of the extension bound and then measures
/// it: with d the J0-diameter of the J act, the right ideal
/// K = {i0} x XT^1 x J of the glued extension, generated as a congruence by
/// H = {i0} x (X u X^2 u X^3) x J0, must have measured diameter <= d + 2.
pub fn check_con1_bound(inst: &Con1Instance) -> Result<WitnessReport, Con1Error> {
    const ID: &str = "extension-ideal-bound";
    let t = &inst.spec.t;
    let nt = t.order();
    let j_size = inst.spec.p.len();
    let i_size = inst.spec.p.first().map_or(0, |row| row.len());
    let x = util::sorted_dedup(&inst.x);
    if let Some(&bad) = x.iter().find(|&&v| v >= nt) {
        return Err(Con1Error::Condition {
            number: 1,
            detail: format!("X entry {bad} outside T"),
        });
    }
    // (1) every element of T lies in X u TX.
    let mut covered = vec![false; nt];
    for &v in &x {
        covered[v] = true;
    }
    for a in t.elements() {
        for &v in &x {
            covered[t.mul(a, v)] = true;
        }
    }
    if let Some(missing) = covered.iter().position(|&c| !c) {
        return Err(Con1Error::Condition {
            number: 1,
            detail: format!("element {} of T is not in T^1 X", t.label(missing)),
        });
    }
    // (2) the J0 rows of the sandwich cover T.
    let j0_set = util::sorted_dedup(&inst.j0_set);
    if let Some(&bad) = j0_set.iter().find(|&&j| j >= j_size) {
        return Err(Con1Error::Condition {
            number: 2,
            detail: format!("J0 index {bad} outside J"),
        });
    }
    let mut seen = vec![false; nt];
    for &j in &j0_set {
        for i in 0..i_size {
            seen[inst.spec.p[j][i]] = true;
        }
    }
    if let Some(missing) = seen.iter().position(|&c| !c) {
        return Err(Con1Error::Condition {
            number: 2,
            detail: format!("entry {} of T missing from the J0 rows", t.label(missing)),
        });
    }
    // (3) the j0 row lies inside X.
    if j0_set.binary_search(&inst.j0).is_err() {
        return Err(Con1Error::Condition {
            number: 3,
            detail: format!("j0 = {} is not in J0", inst.j0),
        });
    }
    for i in 0..i_size {
        let entry = inst.spec.p[inst.j0][i];
        if x.binary_search(&entry).is_err() {
            return Err(Con1Error::Condition {
                number: 3,
                detail: format!("p[j0][{i}] = {} is not in X", t.label(entry)),
            });
        }
    }
    // (4) the right act on J is generated within finite diameter by J0 (the
    // act is finite, so only the measured value d is at stake; when J0 does
    // not generate on its own it is completed by the full carrier first).
    let j_act = match &inst.spec.s {
        Some(sg) => {
            let rows: Vec<Vec<usize>> = (0..j_size)
                .map(|j| sg.elements().map(|a| inst.spec.right_action[a][j]).collect())
                .collect();
            acts::FiniteRightAct::new(sg.clone(), j_size, rows)?
        }
        None => {
            let trivial = fixtures::trivial();
            let rows: Vec<Vec<usize>> = (0..j_size).map(|j| vec![j]).collect();
            acts::FiniteRightAct::new(trivial, j_size, rows)?
        }
    };
    let mut trace = Vec::new();
    let mut j0_used = j0_set.clone();
    let mut d_rep = metric::distance_matrix(&j_act, &GenSet::Symmetric(j0_used.clone()))?;
    if d_rep.diameter.is_none() {
        j0_used = (0..j_size).collect();
        d_rep = metric::distance_matrix(&j_act, &GenSet::Symmetric(j0_used.clone()))?;
        trace.push("J0 completed with the full J carrier to generate the J act".into());
    }
    let d = d_rep.diameter.expect("full carrier generates a finite act") as i64;

    let ext = constructions::extension(&inst.spec)?;
    let m = &ext.semigroup;
    // XT^1 inside T.
    let mut xt1 = x.clone();
    for &v in &x {
        for a in t.elements() {
            xt1.push(t.mul(v, a));
        }
    }
    let xt1 = util::sorted_dedup(&xt1);
    // K = {i0} x XT^1 x J with i0 the first I-index.
    let mut k_ids: Vec<ElementId> = Vec::with_capacity(xt1.len() * j_size);
    for &u in &xt1 {
        for j in 0..j_size {
            k_ids.push(ext.triple_index(0, u, j));
        }
    }
    let k_ids = util::sorted_dedup(&k_ids);
    let (k_act, k_members) = acts::act_of_right_ideal(m, &k_ids)?;
    // U = X u X^2 u X^3.
    let mut u_set = x.clone();
    for &a in &x {
        for &b in &x {
            let ab = t.mul(a, b);
            u_set.push(ab);
            for &c in &x {
                u_set.push(t.mul(ab, c));
            }
        }
    }
    let u_set = util::sorted_dedup(&u_set);
    let mut h_positions = Vec::with_capacity(u_set.len() * j0_used.len());
    let mut h_ids = Vec::with_capacity(h_positions.capacity());
    for &u in &u_set {
        for &j in &j0_used {
            let id = ext.triple_index(0, u, j);
            let pos = k_members
                .binary_search(&id)
                .expect("products of X stay inside X T^1");
            h_positions.push(pos);
            h_ids.push(id);
        }
    }
    let rep = metric::distance_matrix(&k_act, &GenSet::Symmetric(h_positions))?;
    let bound = d + 2;
    trace.push(format!(
        "d = {d}, |K| = {}, |H| = {}; measured H-diameter of K = {}",
        k_members.len(),
        h_ids.len(),
        dia(rep.diameter)
    ));
    let pass = rep.diameter.is_some_and(|v| (v as i64) <= bound);
    Ok(WitnessReport {
        theorem_id: ID,
        instance: format!(
            "extension order {} (|T| = {nt}, I = {i_size}, J = {j_size})",
            m.order()
        ),
        status: CheckStatus::Checked,
        witnesses: vec![
            NamedSet { name: "K".into(), elements: k_ids },
            NamedSet { name: "H".into(), elements: util::sorted_dedup(&h_ids) },
            NamedSet { name: "U".into(), elements: u_set },
            NamedSet { name: "X".into(), elements: x },
        ],
        claimed_bound: bound,
        measured: dia(rep.diameter),
        pass,
        trace,
    })
}

// ---------------------------------------------------------------------------
// Diagonal act generation versus diameter one.
// ---------------------------------------------------------------------------

/// Both directions of the diameter-one characterisation: a minimum
/// generating set U of the diagonal act, read as a pair set, must give the
/// monoid right diameter exactly 1; conversely the symmetrised pair set
/// (with the diagonal pairs over its points) must generate the diagonal act.
pub fn check_diagonal_prop(s: &FiniteSemigroup) -> WitnessReport {
    const ID: &str = "diagonal-act-generation";
    let instance = instance_tag(s);
    if s.identity().is_none() {
        return WitnessReport::not_applicable(ID, instance, "requires a monoid");
    }
    if s.order() < 2 {
        return WitnessReport::not_applicable(ID, instance, "needs at least two elements");
    }
    let n = s.order();
    let diag = acts::diagonal_act(s);
    let mg = acts::min_generating_set(&diag);
    let pairs: Vec<(usize, usize)> = mg.members.iter().map(|&p| (p / n, p % n)).collect();
    let rep = match metric::right_diameter_report(s, &GenSet::Pairs(pairs.clone())) {
        Ok(r) => r,
        Err(err) => return WitnessReport::failed(ID, instance, err.to_string()),
    };
    let forward = rep.diameter == Some(1);
    // Reverse: the symmetrised pair set, together with the diagonal pairs on
    // its points, must generate the diagonal act as an act.
    let mut u_points: Vec<usize> = Vec::new();
    for &(a, b) in &pairs {
        u_points.push(a * n + b);
        u_points.push(b * n + a);
        u_points.push(a * n + a);
        u_points.push(b * n + b);
    }
    let u_points = util::sorted_dedup(&u_points);
    let reverse = acts::is_generating_set(&diag, &u_points);
    let pass = forward && reverse;
    let trace = vec![
        format!(
            "minimum diagonal generating set ({}): {:?}",
            if mg.exact { "exact" } else { "greedy" },
            pairs
                .iter()
                .map(|&(a, b)| format!("({}, {})", s.label(a), s.label(b)))
                .collect::<Vec<_>>()
        ),
        format!(
            "pair-set right diameter = {}; symmetrised set generates the diagonal act: {reverse}",
            dia(rep.diameter)
        ),
    ];
    WitnessReport {
        theorem_id: ID,
        instance,
        status: CheckStatus::Checked,
        witnesses: vec![NamedSet { name: "U".into(), elements: mg.members }],
        claimed_bound: 1,
        measured: dia(rep.diameter),
        pass,
        trace,
    }
}

// ---------------------------------------------------------------------------
// Orthodox structure.
// ---------------------------------------------------------------------------

#[derive(Debug, thiserror::Error)]
pub enum StructureCheckError {
    #[error("not an orthodox monoid: {why}")]
    NotOrthodox { why: String },
}

/// On an orthodox monoid: the kernel must be completely simple, the L- and
/// R-classes of its least idempotent e must be minimal one-sided ideals,
/// a -> eae must be a homomorphism onto H_e (checked over all pairs), the
/// idempotents must decompose as a semilattice of rectangular bands whose
/// least component is exactly E n kernel, and the quotient act R_e/H must
/// build cleanly.
pub fn check_orthodox_structure(
    s: &FiniteSemigroup,
) -> Result<WitnessReport, StructureCheckError> {
    const ID: &str = "orthodox-structure";
    let instance = instance_tag(s);
    let g = green(s);
    let preds = predicates_with_green(s, &g);
    if s.identity().is_none() {
        return Err(StructureCheckError::NotOrthodox { why: "not a monoid".into() });
    }
    if !preds.orthodox {
        return Err(StructureCheckError::NotOrthodox {
            why: if preds.regular {
                "idempotents are not closed under multiplication".into()
            } else {
                "not regular".into()
            },
        });
    }
    let ctx = kernel_ctx(s).map_err(|why| StructureCheckError::NotOrthodox { why })?;
    let e = ctx.e;
    let mut violations: i64 = 0;
    let mut trace = Vec::new();
    if !ctx.kd.is_completely_simple {
        violations += 1;
        trace.push("kernel failed the completely-simple verification".into());
    }
    let l_e = util::sorted_dedup(g.l.class(g.l.class_of(e)));
    let r_e = util::sorted_dedup(g.r.class(g.r.class_of(e)));
    if !ctx.kd.minimal_left_ideals.contains(&l_e) {
        violations += 1;
        trace.push("L-class of e is not a minimal left ideal".into());
    }
    if !ctx.kd.minimal_right_ideals.contains(&r_e) {
        violations += 1;
        trace.push("R-class of e is not a minimal right ideal".into());
    }
    // a -> eae is a homomorphism with image H_e.
    let phi = |a: ElementId| s.mul(s.mul(e, a), e);
    let hom_ok = s
        .elements()
        .all(|a| s.elements().all(|b| phi(s.mul(a, b)) == s.mul(phi(a), phi(b))));
    let image = util::sorted_dedup(&s.elements().map(phi).collect::<Vec<_>>());
    let h_e = util::sorted_dedup(g.h.class(g.h.class_of(e)));
    if !hom_ok {
        violations += 1;
        trace.push("a -> eae is not multiplicative".into());
    }
    if image != h_e {
        violations += 1;
        trace.push("image of a -> eae differs from H_e".into());
    }
    // The idempotents form a band decomposing into a semilattice of
    // rectangular components; the least component is E n kernel.
    let idems = s.idempotents();
    let mut b0: Vec<ElementId> = Vec::new();
    match s.subsemigroup(&idems) {
        Ok((band, members)) => match band_decomposition(&band) {
            Ok(bd) => match has_zero(&bd.semilattice) {
                Some(z) => {
                    b0 = bd.partition.class(z).iter().map(|&i| members[i]).collect();
                    b0.sort_unstable();
                    let expected: Vec<ElementId> = idems
                        .iter()
                        .copied()
                        .filter(|&f| ctx.kd.elements.binary_search(&f).is_ok())
                        .collect();
                    if b0 != expected {
                        violations += 1;
                        trace.push("least band component differs from E n kernel".into());
                    }
                }
                None => {
                    violations += 1;
                    trace.push("band semilattice has no least element".into());
                }
            },
            Err(err) => {
                violations += 1;
                trace.push(format!("band decomposition failed: {err}"));
            }
        },
        Err(err) => {
            violations += 1;
            trace.push(format!("idempotents are not closed: {err}"));
        }
    }
    // The quotient act R_e/H must be well defined.
    match acts::r_class_mod_h_act(s, &g, &r_e) {
        Ok((act, _)) => trace.push(format!("R_e/H act has {} points", act.carrier())),
        Err(err) => {
            violations += 1;
            trace.push(format!("R_e/H act ill-defined: {err}"));
        }
    }
    trace.push(format!(
        "e = {}, |H_e| = {}, homomorphism verified over {} pairs",
        s.label(e),
        h_e.len(),
        s.order() * s.order()
    ));
    Ok(WitnessReport {
        theorem_id: ID,
        instance,
        status: CheckStatus::Checked,
        witnesses: vec![
            NamedSet { name: "kernel".into(), elements: ctx.kd.elements.clone() },
            NamedSet { name: "H_e".into(), elements: h_e },
            NamedSet { name: "least-band-component".into(), elements: b0 },
        ],
        claimed_bound: 0,
        measured: violations,
        pass: violations == 0,
        trace,
    })
}

// ---------------------------------------------------------------------------
// Suite runner.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CheckKind {
    Csmi,
    RightReversible,
    JTrivialZero,
    MinIdeal,
    Con1,
    Diagonal,
    Orthodox,
}

impl CheckKind {
    pub fn all() -> Vec<CheckKind> {
        vec![
            CheckKind::Csmi,
            CheckKind::RightReversible,
            CheckKind::JTrivialZero,
            CheckKind::MinIdeal,
            CheckKind::Con1,
            CheckKind::Diagonal,
            CheckKind::Orthodox,
        ]
    }

    /// Parses a selector token: `all`, `csmi`, `rr`, `jtrivial`, `minideal`,
    /// `con1`, `diag`, or `orthodox`.
    pub fn parse(token: &str) -> Option<Vec<CheckKind>> {
        Some(match token {
            "all" => CheckKind::all(),
            "csmi" => vec![CheckKind::Csmi],
            "rr" => vec![CheckKind::RightReversible],
            "jtrivial" => vec![CheckKind::JTrivialZero],
            "minideal" => vec![CheckKind::MinIdeal],
            "con1" => vec![CheckKind::Con1],
            "diag" => vec![CheckKind::Diagonal],
            "orthodox" => vec![CheckKind::Orthodox],
            _ => return None,
        })
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Number of random transformation monoids to add to the fixtures.
    pub random_count: usize,
    pub seed: u64,
    /// Random instances above this order are redrawn.
    pub order_cap: usize,
    /// Transformation degree for random draws; None cycles through 2..=4.
    pub degree: Option<usize>,
    pub checks: Vec<CheckKind>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            random_count: 0,
            seed: 0,
            order_cap: 60,
            degree: None,
            checks: CheckKind::all(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteEntry {
    pub theorem_id: String,
    pub instance: String,
    pub instance_hash: u64,
    pub bound: i64,
    pub measured: i64,
    pub pass: bool,
    pub seed: Option<u64>,
    pub status: CheckStatus,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub entries: Vec<SuiteEntry>,
    /// Multiplication-table JSON of every instance with a failing entry.
    pub failures: Vec<String>,
    pub all_pass: bool,
}

/// Largest base order for which the suite derives a glued-extension
/// instance from a monoid (the extension has order n + 1 + (n+1)^2 n).
const CON1_SUITE_MAX_ORDER: usize = 9;

fn entry_from(report: &WitnessReport, name: &str, hash: u64, seed: Option<u64>) -> SuiteEntry {
    SuiteEntry {
        theorem_id: report.theorem_id.to_string(),
        instance: format!("{name}: {}", report.instance),
        instance_hash: hash,
        bound: report.claimed_bound,
        measured: report.measured,
        pass: report.pass,
        seed,
        status: report.status,
    }
}

/// Runs the selected checks on a single instance, one entry per report.
pub fn run_checks_on(
    name: &str,
    s: &FiniteSemigroup,
    seed: Option<u64>,
    checks: &[CheckKind],
) -> Vec<SuiteEntry> {
    let hash = s.table_hash();
    let mut local: Vec<WitnessReport> = Vec::new();
    for kind in checks {
        match kind {
            CheckKind::Csmi => {
                let all: Vec<ElementId> = s.elements().collect();
                local.extend(csmi_chain(s, &all));
            }
            CheckKind::RightReversible => local.push(check_rr_equivalence(s)),
            CheckKind::JTrivialZero => local.push(check_jtrivial_zero(s)),
            CheckKind::MinIdeal => local.push(check_min_ideal_conditions(s)),
            CheckKind::Con1 => {
                if let Some(one) = s.identity() {
                    if s.order() <= CON1_SUITE_MAX_ORDER {
                        match con1_from_e_of(s, one, None)
                            .map_err(Con1Error::from)
                            .and_then(|inst| check_con1_bound(&inst))
                        {
                            Ok(rep) => local.push(rep),
                            Err(err) => local.push(WitnessReport::failed(
                                "extension-ideal-bound",
                                instance_tag(s),
                                err.to_string(),
                            )),
                        }
                    }
                }
            }
            CheckKind::Diagonal => local.push(check_diagonal_prop(s)),
            CheckKind::Orthodox => {
                let g = green(s);
                if s.identity().is_some() && predicates_with_green(s, &g).orthodox {
                    match check_orthodox_structure(s) {
                        Ok(rep) => local.push(rep),
                        Err(err) => local.push(WitnessReport::failed(
                            "orthodox-structure",
                            instance_tag(s),
                            err.to_string(),
                        )),
                    }
                } else {
                    local.push(WitnessReport::not_applicable(
                        "orthodox-structure",
                        instance_tag(s),
                        "not orthodox",
                    ));
                }
            }
        }
    }
    local.iter().map(|rep| entry_from(rep, name, hash, seed)).collect()
}

/// Runs the selected checks over the named fixtures plus a seeded random
/// corpus. Any failing entry is fatal for `all_pass` and the offending
/// multiplication table is emitted as JSON alongside the entries.
pub fn run_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut instances: Vec<(String, FiniteSemigroup, Option<u64>)> = fixtures::suite_fixtures()
        .into_iter()
        .map(|(name, s)| (name.to_string(), s, None))
        .collect();
    let mut found = 0usize;
    let mut attempt = 0u64;
    while found < cfg.random_count && attempt < cfg.random_count as u64 * 20 + 20 {
        let seed = cfg.seed.wrapping_add(attempt);
        let degree = cfg.degree.unwrap_or(2 + (attempt as usize % 3));
        let gens = 1 + (attempt as usize % 2);
        attempt += 1;
        if let Ok((m, _)) = crate::semigroup::random_transformation_monoid(degree, gens, seed) {
            if m.order() <= cfg.order_cap {
                instances.push((format!("random-{seed} (degree {degree})"), m, Some(seed)));
                found += 1;
            }
        }
    }
    let mut entries = Vec::new();
    let mut failures = Vec::new();
    for (name, s, seed) in &instances {
        let local = run_checks_on(name, s, *seed, &cfg.checks);
        let any_fail = local.iter().any(|e| !e.pass);
        entries.extend(local);
        if any_fail {
            let json = crate::io::SemigroupJson::from_semigroup(s);
            failures.push(
                serde_json::to_string(&json).unwrap_or_else(|_| format!("{name}: unserialisable")),
            );
        }
    }
    let all_pass = entries.iter().all(|e| e.pass);
    SuiteReport { entries, failures, all_pass }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn kernel_bound_on_the_two_constant_monoid() {
        let t2 = fixtures::t2();
        // X = {identity, swap, first constant}: measured monoid diameter 2.
        let rep = check_csmi_2a(&t2, &[1, 2, 0]);
        assert!(rep.pass);
        assert_eq!(rep.claimed_bound, 7); // 2n + 3 with n = 2
        assert_eq!(rep.measured, 1);
        assert_eq!(rep.witness("K0").unwrap(), &[0, 3]); // both constants
        assert_eq!(rep.witness("Y").unwrap(), &[0, 3]);
    }

    #[test]
    fn kernel_bound_on_the_flat_monoids() {
        let o2 = fixtures::o2();
        let rep = check_csmi_2a(&o2, &[0, 1]);
        assert!(rep.pass);
        assert_eq!(rep.claimed_bound, 5); // n = 1
        assert_eq!(rep.measured, 1);
        assert_eq!(rep.witness("K0").unwrap(), &[1]);

        let z2 = fixtures::z2();
        let rep = check_csmi_2a(&z2, &[0, 1]);
        assert!(rep.pass);
        assert_eq!(rep.claimed_bound, 5);
        assert_eq!(rep.witness("K0").unwrap(), &[0, 1]);
    }

    #[test]
    fn kernel_bound_adjoins_the_idempotent_when_missing() {
        let n3 = fixtures::n3();
        let rep = check_csmi_2a(&n3, &[0, 1]); // no kernel idempotent in X
        assert!(rep.pass);
        assert!(rep.trace.iter().any(|l| l.contains("adjoined")));
        assert!(rep.witness("X").unwrap().contains(&2));
    }

    #[test]
    fn group_bound_after_kernel_stage() {
        let t2 = fixtures::t2();
        let first = check_csmi_2a(&t2, &[1, 2, 0]);
        let rep = check_csmi_2to3(
            &t2,
            first.witness("K0").unwrap(),
            first.witness("Y").unwrap(),
        );
        assert!(rep.pass);
        assert_eq!(rep.measured, 0); // trivial maximal subgroup
        assert_eq!(rep.witness("G").unwrap(), &[0]);
    }

    #[test]
    fn group_bound_recovers_the_sandwich_entries() {
        let s = fixtures::rees_z2_2x2_1();
        let chain = csmi_chain(&s, &s.elements().collect::<Vec<_>>());
        assert_eq!(chain.len(), 3);
        assert!(chain.iter().all(|r| r.pass));
        // V is the full maximal subgroup: both sandwich values appear.
        let second = &chain[1];
        assert_eq!(second.witness("V").unwrap().len(), 2);
        assert_eq!(second.witness("G").unwrap().len(), 2);
    }

    #[test]
    fn group_bound_on_group_kernels_reduces_to_f() {
        let z3 = fixtures::z3();
        let chain = csmi_chain(&z3, &[0, 1, 2]);
        assert!(chain.iter().all(|r| r.pass));
        assert_eq!(chain[1].witness("V").unwrap(), &[0]); // V = {e}
    }

    #[test]
    fn rclass_bound_values() {
        let t2 = fixtures::t2();
        let rep = check_csmi_3to1(&t2);
        assert!(rep.pass);
        assert_eq!(rep.claimed_bound, 1); // n = 0, m = 1
        assert_eq!(rep.measured, 1);

        let trivial = fixtures::trivial();
        let rep = check_csmi_3to1(&trivial);
        assert!(rep.pass);
        assert_eq!((rep.claimed_bound, rep.measured), (0, 0));

        let z2 = fixtures::z2();
        let rep = check_csmi_3to1(&z2);
        assert!(rep.pass);
        assert_eq!(rep.claimed_bound, 2); // kernel is a group: bound 2n
        assert_eq!(rep.measured, 1);
    }

    #[test]
    fn rr_agreement_positive_and_negative() {
        let lz = fixtures::lz2_1();
        let rep = check_rr_equivalence(&lz);
        assert!(rep.pass);
        assert!(rep.trace[0].contains("rr=true"));
        assert!(rep.trace[0].contains("unique-min-left-ideal=true"));

        let rz = fixtures::rz2_1();
        let rep = check_rr_equivalence(&rz);
        assert!(rep.pass); // all four false: still agreement
        assert!(rep.trace[0].contains("rr=false"));
        assert!(rep.trace[0].contains("kernel-left-simple=false"));

        for s in [fixtures::z3(), fixtures::o2(), fixtures::n3()] {
            let rep = check_rr_equivalence(&s);
            assert!(rep.pass, "commutative monoid should agree on all four");
            assert!(rep.trace[0].contains("rr=true"));
        }
    }

    #[test]
    fn jtrivial_zero_derivation() {
        let n3 = fixtures::n3();
        let rep = check_jtrivial_zero(&n3);
        assert_eq!(rep.status, CheckStatus::Checked);
        assert!(rep.pass);
        assert_eq!(rep.witness("derived-zero").unwrap(), &[2]);

        let o2 = fixtures::o2(); // a two-element semilattice
        let rep = check_jtrivial_zero(&o2);
        assert!(rep.pass);
        assert_eq!(rep.witness("derived-zero").unwrap(), &[1]);

        let z2 = fixtures::z2();
        let rep = check_jtrivial_zero(&z2);
        assert_eq!(rep.status, CheckStatus::NotApplicable);
        assert!(rep.pass);
    }

    #[test]
    fn local_zero_chaining_runs_on_short_generating_sets() {
        // With X = {1, a} on the three-element nilpotent monoid the chain to
        // the bottom element has two steps, exercising the recurrence.
        let n3 = fixtures::n3();
        let g = green(&n3);
        let per = chained_local_zeros(&n3, &g, &[0, 1]).unwrap();
        assert_eq!(per[2], 2); // the bottom element forces the zero
        let v = util::sorted_dedup(&per);
        let z = v[1..].iter().fold(v[0], |acc, &w| n3.mul(acc, w));
        assert_eq!(z, 2);
    }

    #[test]
    fn min_ideal_conditions_on_fixtures() {
        for s in [fixtures::rz2_1(), fixtures::t2(), fixtures::z3(), fixtures::n3()] {
            let rep = check_min_ideal_conditions(&s);
            assert!(rep.pass, "instance {}", rep.instance);
        }
        let z3 = fixtures::z3();
        let rep = check_min_ideal_conditions(&z3);
        assert!(rep.trace.iter().any(|l| l.contains("kernel equals union")));
        let rz = fixtures::rz2_1();
        let rep = check_min_ideal_conditions(&rz);
        assert_eq!(rep.witness("k").unwrap(), &[0]);
    }

    #[test]
    fn extension_bound_degenerate_instance() {
        let inst = Con1Instance {
            spec: ExtensionSpec {
                s: None,
                t: fixtures::trivial(),
                left_action: vec![],
                right_action: vec![],
                p: vec![vec![0]],
            },
            x: vec![0],
            j0_set: vec![0],
            j0: 0,
        };
        let rep = check_con1_bound(&inst).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.claimed_bound, 2); // d = 0
        assert_eq!(rep.measured, 0); // K is a single point
    }

    #[test]
    fn extension_bound_from_e_of() {
        let trivial = fixtures::trivial();
        let inst = con1_from_e_of(&trivial, 0, None).unwrap();
        let rep = check_con1_bound(&inst).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.witness("K").unwrap().len(), 2);

        let z2 = fixtures::z2();
        let inst = con1_from_e_of(&z2, 0, None).unwrap();
        let rep = check_con1_bound(&inst).unwrap();
        assert!(rep.pass, "trace: {:?}", rep.trace);
    }

    #[test]
    fn extension_bound_rejects_uncovering_rows() {
        // Two J-rows over Z2; J0 selects only the all-identity row, which
        // does not cover the group.
        let z2 = fixtures::z2();
        let inst = Con1Instance {
            spec: ExtensionSpec {
                s: None,
                t: z2,
                left_action: vec![],
                right_action: vec![],
                p: vec![vec![0, 0], vec![0, 1]],
            },
            x: vec![0],
            j0_set: vec![0],
            j0: 0,
        };
        match check_con1_bound(&inst) {
            Err(Con1Error::Condition { number: 2, .. }) => {}
            other => panic!("expected condition (2) failure, got {other:?}"),
        }
    }

    #[test]
    fn extension_bound_weak_reversibility_shape() {
        // J = {1, 2} with an all-identity first row and a second row
        // covering the base: both rows are needed to cover, j0 is the first.
        let z2 = fixtures::z2();
        let inst = Con1Instance {
            spec: ExtensionSpec {
                s: None,
                t: z2,
                left_action: vec![],
                right_action: vec![],
                p: vec![vec![0, 0], vec![0, 1]],
            },
            x: vec![0],
            j0_set: vec![0, 1],
            j0: 0,
        };
        let rep = check_con1_bound(&inst).unwrap();
        assert!(rep.pass, "trace: {:?}", rep.trace);
        assert_eq!(rep.witness("K").unwrap().len(), 4); // {i0} x Z2 x {1,2}
    }

    #[test]
    fn diagonal_generation_worked_examples() {
        let z2 = fixtures::z2();
        let rep = check_diagonal_prop(&z2);
        assert!(rep.pass);
        assert_eq!(rep.measured, 1);
        // U = {(1,1), (1,g)} encoded row-major.
        assert_eq!(rep.witness("U").unwrap(), &[0, 1]);

        let o2 = fixtures::o2();
        let rep = check_diagonal_prop(&o2);
        assert!(rep.pass);
        assert_eq!(rep.witness("U").unwrap(), &[0, 1, 2]);

        let trivial = fixtures::trivial();
        let rep = check_diagonal_prop(&trivial);
        assert_eq!(rep.status, CheckStatus::NotApplicable);
    }

    #[test]
    fn orthodox_structure_examples() {
        let t2 = fixtures::t2();
        let rep = check_orthodox_structure(&t2).unwrap();
        assert!(rep.pass, "trace: {:?}", rep.trace);
        assert_eq!(rep.witness("H_e").unwrap(), &[0]);

        let ext = fixtures::ext_const_z2();
        let rep = check_orthodox_structure(&ext).unwrap();
        assert!(rep.pass, "trace: {:?}", rep.trace);
        assert_eq!(rep.witness("kernel").unwrap(), &[2, 3]);

        let n3 = fixtures::n3();
        assert!(matches!(
            check_orthodox_structure(&n3),
            Err(StructureCheckError::NotOrthodox { .. })
        ));
    }

    #[test]
    fn suite_fixtures_all_pass() {
        let cfg = SuiteConfig { random_count: 0, ..SuiteConfig::default() };
        let report = run_suite(&cfg);
        assert!(report.all_pass, "failures: {:?}", report.failures);
        assert!(report.entries.len() >= 50);
        assert!(report.failures.is_empty());
    }

    #[test]
    fn suite_empty_check_list() {
        let cfg = SuiteConfig { checks: vec![], ..SuiteConfig::default() };
        let report = run_suite(&cfg);
        assert!(report.entries.is_empty());
        assert!(report.all_pass);
    }

    #[test]
    fn suite_random_instances() {
        let cfg = SuiteConfig {
            random_count: 6,
            seed: 42,
            order_cap: 40,
            degree: None,
            checks: vec![CheckKind::Csmi, CheckKind::RightReversible, CheckKind::MinIdeal],
        };
        let report = run_suite(&cfg);
        assert!(report.all_pass, "failures: {:?}", report.failures);
        assert!(report.entries.iter().any(|e| e.seed.is_some()));
    }

    #[test]
    fn check_kind_tokens() {
        assert_eq!(CheckKind::parse("all").unwrap().len(), 7);
        assert_eq!(CheckKind::parse("rr").unwrap(), vec![CheckKind::RightReversible]);
        assert!(CheckKind::parse("nonsense").is_none());
    }
}
