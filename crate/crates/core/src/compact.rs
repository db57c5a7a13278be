//! Saturated compact sets and exhaustive search.
//!
//! A compact set is a point of `O(O(X))` semideciding containment in open
//! sets. The flagship witness is Cantor space: containment of the whole
//! space in an open set is searched over the canonical finitely-branching
//! tree of name prefixes. At stage `d` every unconfirmed node of depth `d`
//! runs the membership test on its partial name under a geometrically
//! growing budget; a test reading past the prefix fails the node at this
//! stage, and confirmation of a node retires its whole subtree. The search
//! confirms when no unconfirmed node is left, which by König's lemma
//! happens exactly when the open set genuinely covers.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{KernelError, KernelResult};
use crate::fuel::{FuelMeter, Interrupt, Observation};
use crate::names::{pair, unpair, Name};
use crate::search::{search_name, SearchProcess, StepOutcome};
use crate::sets::{
    and_fn_name, compose_names, countable_union, cut_name, empty_open, or_fn_name,
    pointwise_binary, seq_point, ClosedSet, OpenSet,
};
use crate::spaces::{
    closed_space, compact_space, host_fn_name, open_space, proj1_fn_point, proj2_fn_point,
    sierp_point, sierp_observe_metered, Point, SierpObservation, Space, SpaceKind,
};
use crate::t2vm::{apply_name, register_host, HostRealizer, MachineIndex};

/// A saturated compact subset of its base space.
#[derive(Clone, Debug)]
pub struct CompactSet(Point);

impl CompactSet {
    pub fn from_point(p: Point) -> KernelResult<Self> {
        match p.space().kind() {
            SpaceKind::Compact(_) => Ok(CompactSet(p)),
            _ => Err(KernelError::DescriptorMismatch {
                expected: "a compact-set point".into(),
                found: format!("{:?}", p.space()),
            }),
        }
    }

    pub fn new(base: Space, name: Name) -> Self {
        CompactSet(Point::new(compact_space(base), name))
    }

    pub fn base(&self) -> Space {
        match self.0.space().kind() {
            SpaceKind::Compact(x) => x.clone(),
            _ => unreachable!("compact sets carry Compact descriptors"),
        }
    }

    pub fn point(&self) -> &Point {
        &self.0
    }

    pub fn name(&self) -> &Name {
        self.0.name()
    }
}

// ---------------------------------------------------------------------------
// Canonical trees and the König search
// ---------------------------------------------------------------------------

/// A node of a canonical name tree: a finite approximation of the names of
/// a compact set, with finitely many refinements.
pub trait TreeNode: Send + Sync {
    fn children(&self) -> Vec<Arc<dyn TreeNode>>;
    /// The partial name rejecting queries beyond this node's information.
    fn partial_name(&self) -> Name;
}

/// A finitely-branching tree of partial names whose infinite branches
/// realize exactly a target compact set.
pub trait CanonicalTree: Send + Sync {
    /// Depth-1 nodes.
    fn roots(&self) -> Vec<Arc<dyn TreeNode>>;
}

/// The full binary tree: branches are exactly the names of Cantor space.
pub struct CantorTree;

struct CantorNode {
    bits: Vec<bool>,
}

impl TreeNode for CantorNode {
    fn children(&self) -> Vec<Arc<dyn TreeNode>> {
        [false, true]
            .into_iter()
            .map(|b| {
                let mut bits = self.bits.clone();
                bits.push(b);
                Arc::new(CantorNode { bits }) as Arc<dyn TreeNode>
            })
            .collect()
    }

    fn partial_name(&self) -> Name {
        Name::partial_word(self.bits.clone())
    }
}

impl CanonicalTree for CantorTree {
    fn roots(&self) -> Vec<Arc<dyn TreeNode>> {
        vec![
            Arc::new(CantorNode { bits: vec![false] }),
            Arc::new(CantorNode { bits: vec![true] }),
        ]
    }
}

/// Per-node budget at stage `d`. Grows geometrically so that deeper
/// stages can afford dovetailed membership tests; stays at least `d`, so a
/// test confirming within `d` steps on `d` bits confirms by stage `d`.
fn branch_budget(stage: u64) -> u64 {
    64u64.saturating_mul(1u64.checked_shl(stage.min(40) as u32).unwrap_or(u64::MAX))
}

struct KoenigSearch {
    member: Name,
    stage: u64,
    frontier: Vec<Arc<dyn TreeNode>>,
    cursor: usize,
    survivors: Vec<Arc<dyn TreeNode>>,
}

impl KoenigSearch {
    fn new(tree: &dyn CanonicalTree, member: Name) -> Self {
        KoenigSearch {
            member,
            stage: 1,
            frontier: tree.roots(),
            cursor: 0,
            survivors: Vec::new(),
        }
    }

    /// Stage reached so far; diagnostic.
    fn depth(&self) -> u64 {
        self.stage
    }
}

impl SearchProcess for KoenigSearch {
    fn step(&mut self, meter: &mut FuelMeter) -> Observation<StepOutcome> {
        if self.cursor < self.frontier.len() {
            let node = self.frontier[self.cursor].clone();
            let member = self.member.clone();
            let outcome = meter.run_capped(branch_budget(self.stage), |m| {
                let test = apply_name(&member, &node.partial_name());
                match sierp_observe_metered(&test, m) {
                    SierpObservation::Confirmed => Ok(()),
                    // Undecided within the cap; surface as an interrupt so
                    // the budgeting below can classify it.
                    SierpObservation::Unknown => Err(Interrupt::FuelExhausted),
                }
            });
            match outcome.result {
                Ok(()) => {}
                // Undecided within the stage budget: the node survives to
                // the next stage. A check cut short by the caller's budget
                // instead of the stage cap is not classified; the step is
                // retried when more fuel arrives, keeping the schedule
                // fuel-independent.
                Err(_) if outcome.cap_limited || meter.remaining() > 0 => {
                    self.survivors.push(node);
                }
                Err(e) => return Err(e),
            }
            self.cursor += 1;
            return Ok(StepOutcome::Progress);
        }
        if self.survivors.is_empty() {
            return Ok(StepOutcome::Confirmed);
        }
        let mut next = Vec::new();
        for survivor in self.survivors.drain(..) {
            let kids = survivor.children();
            if kids.is_empty() {
                // Dead ends stay in the frontier and are retried with a
                // larger budget.
                next.push(survivor);
            } else {
                next.extend(kids);
            }
        }
        self.frontier = next;
        self.cursor = 0;
        self.stage += 1;
        Ok(StepOutcome::Progress)
    }
}

/// Shared stage counter so CLI output can report the confirming depth.
struct InstrumentedKoenig {
    inner: KoenigSearch,
    depth: Arc<AtomicU64>,
}

impl SearchProcess for InstrumentedKoenig {
    fn step(&mut self, meter: &mut FuelMeter) -> Observation<StepOutcome> {
        let r = self.inner.step(meter);
        self.depth.store(self.inner.depth(), Ordering::Relaxed);
        r
    }
}

/// Containment search of a whole canonical tree in the open set named by
/// `member`, as a Sierpiński name.
pub fn koenig_contained(tree: &dyn CanonicalTree, member: Name) -> Name {
    search_name(KoenigSearch::new(tree, member))
}

/// As [`koenig_contained`], exposing the stage counter.
pub fn koenig_contained_instrumented(
    tree: &dyn CanonicalTree,
    member: Name,
) -> (Name, Arc<AtomicU64>) {
    let depth = Arc::new(AtomicU64::new(1));
    let name = search_name(InstrumentedKoenig {
        inner: KoenigSearch::new(tree, member),
        depth: depth.clone(),
    });
    (name, depth)
}

// ---------------------------------------------------------------------------
// Core operations on K(X)
// ---------------------------------------------------------------------------

fn expect_base(space: &Space, base: &Space) -> KernelResult<()> {
    if space == base {
        Ok(())
    } else {
        Err(KernelError::DescriptorMismatch {
            expected: format!("{base:?}"),
            found: format!("{space:?}"),
        })
    }
}

/// `ContainedIn : K(X) × O(X) → S`; an instantiation of eval.
pub fn contained_in(k: &CompactSet, u: &OpenSet) -> KernelResult<Point> {
    expect_base(&u.base(), &k.base())?;
    Ok(sierp_point(apply_name(k.name(), u.name())))
}

/// The saturated singleton: its containment test is membership of the
/// point, realized exactly like κ.
pub fn sat_singleton(x: &Point) -> CompactSet {
    CompactSet::new(
        x.space().clone(),
        crate::admissibility::kappa_name(x.name()),
    )
}

/// Union of compacts: contained in U iff both are.
pub fn k_union(k1: &CompactSet, k2: &CompactSet) -> KernelResult<CompactSet> {
    expect_base(&k2.base(), &k1.base())?;
    Ok(CompactSet::new(
        k1.base(),
        pointwise_binary(&and_fn_name(), k1.name(), k2.name()),
    ))
}

/// The compact set contained in every open set; the unit of [`k_union`].
pub fn empty_compact(base: Space) -> CompactSet {
    CompactSet::new(
        base,
        Name::padded(
            crate::t2vm::Builtin::ConstFn.machine_index(),
            Name::word(vec![true]),
        ),
    )
}

fn k_intersect_closed_index() -> BigUint {
    struct KIntersect;
    impl HostRealizer for KIntersect {
        fn apply(&self, oracle: &Name, input: &Name) -> Name {
            let (k, b) = unpair(oracle);
            // K ∩ B ⊆ U iff K ⊆ U ∪ Bᶜ; the complement shares B's name.
            let relaxed = pointwise_binary(&or_fn_name(), input, &b);
            apply_name(&k, &relaxed)
        }
        fn label(&self) -> &'static str {
            "compact-intersect-closed"
        }
    }
    static INDEX: OnceLock<BigUint> = OnceLock::new();
    INDEX
        .get_or_init(|| MachineIndex::host(register_host(Arc::new(KIntersect))).0)
        .clone()
}

/// `∩ : K(X) × A(X) → K(X)`.
pub fn k_intersect_closed(k: &CompactSet, b: &ClosedSet) -> KernelResult<CompactSet> {
    expect_base(&b.base(), &k.base())?;
    Ok(CompactSet::new(
        k.base(),
        Name::padded(
            k_intersect_closed_index(),
            pair(k.name().clone(), b.name().clone()),
        ),
    ))
}

fn k_image_index() -> BigUint {
    struct KImage;
    impl HostRealizer for KImage {
        fn apply(&self, oracle: &Name, input: &Name) -> Name {
            let (f, k) = unpair(oracle);
            // f[K] ⊆ U iff K ⊆ f⁻¹(U).
            apply_name(&k, &compose_names(input, &f))
        }
        fn label(&self) -> &'static str {
            "compact-image"
        }
    }
    static INDEX: OnceLock<BigUint> = OnceLock::new();
    INDEX
        .get_or_init(|| MachineIndex::host(register_host(Arc::new(KImage))).0)
        .clone()
}

/// `(f, K) ↦ f[K] : C(X, Y) × K(X) → K(Y)`.
pub fn k_image(f: &Point, k: &CompactSet) -> KernelResult<CompactSet> {
    let Some((dom, cod)) = f.space().as_function() else {
        return Err(KernelError::DescriptorMismatch {
            expected: "a function-space point".into(),
            found: format!("{:?}", f.space()),
        });
    };
    expect_base(&dom, &k.base())?;
    Ok(CompactSet::new(
        cod,
        Name::padded(k_image_index(), pair(f.name().clone(), k.name().clone())),
    ))
}

fn k_product_index() -> BigUint {
    struct KProduct;
    impl HostRealizer for KProduct {
        fn apply(&self, oracle: &Name, input: &Name) -> Name {
            let (k1, k2) = unpair(oracle);
            let u = input.clone();
            // A × B ⊆ U iff B ⊆ {y | A ⊆ Cut(y, U)}.
            let u_a = host_fn_name(move |y| apply_name(&k1, &cut_name(y, &u)));
            apply_name(&k2, &u_a)
        }
        fn label(&self) -> &'static str {
            "compact-product"
        }
    }
    static INDEX: OnceLock<BigUint> = OnceLock::new();
    INDEX
        .get_or_init(|| MachineIndex::host(register_host(Arc::new(KProduct))).0)
        .clone()
}

/// `× : K(X) × K(Y) → K(X × Y)`.
pub fn k_product(k1: &CompactSet, k2: &CompactSet) -> CompactSet {
    CompactSet::new(
        crate::spaces::product_space(k1.base(), k2.base()),
        Name::padded(
            k_product_index(),
            pair(k1.name().clone(), k2.name().clone()),
        ),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductSide {
    First,
    Second,
}

/// Projections of a compact subset of a product, via the image under π.
pub fn k_project(k: &CompactSet, side: ProductSide) -> KernelResult<CompactSet> {
    let SpaceKind::Product(x, y) = k.base().kind().clone() else {
        return Err(KernelError::DescriptorMismatch {
            expected: "a compact subset of a product".into(),
            found: format!("{:?}", k.base()),
        });
    };
    let projection = match side {
        ProductSide::First => proj1_fn_point(x, y),
        ProductSide::Second => proj2_fn_point(x, y),
    };
    k_image(&projection, k)
}

// ---------------------------------------------------------------------------
// Cantor space compactness
// ---------------------------------------------------------------------------

/// Emptiness of a closed subset of Cantor space: the exhaustive search
/// behind `cantor_space()`'s compactness capability. A closed set is empty
/// exactly when its non-membership test confirms on every branch.
pub fn is_empty_closed_cantor(a: &ClosedSet) -> Point {
    sierp_point(koenig_contained(&CantorTree, a.name().clone()))
}

/// Capability-shaped wrapper around [`is_empty_closed_cantor`].
pub fn cantor_closed_is_empty(a: &Point) -> Point {
    sierp_point(koenig_contained(&CantorTree, a.name().clone()))
}

fn cantor_whole_index() -> BigUint {
    struct CantorWhole;
    impl HostRealizer for CantorWhole {
        fn apply(&self, _oracle: &Name, input: &Name) -> Name {
            koenig_contained(&CantorTree, input.clone())
        }
        fn label(&self) -> &'static str {
            "cantor-as-compact"
        }
    }
    static INDEX: OnceLock<BigUint> = OnceLock::new();
    INDEX
        .get_or_init(|| MachineIndex::host(register_host(Arc::new(CantorWhole))).0)
        .clone()
}

/// The whole of Cantor space as a compact set.
pub fn cantor_as_compact() -> CompactSet {
    CompactSet::new(
        crate::spaces::cantor_space(),
        Name::padded(cantor_whole_index(), Name::zeros()),
    )
}

/// `id : A(X) → K(X)` for spaces carrying the compactness capability:
/// `A ⊆ U` is the emptiness of `A ∩ Uᶜ`.
pub fn closed_to_compact(a: &ClosedSet) -> KernelResult<CompactSet> {
    let base = a.base();
    let witness = base
        .caps()
        .compact
        .clone()
        .ok_or_else(|| KernelError::MissingCapability {
            space: format!("{base:?}"),
            capability: "compact",
        })?;
    let a_name = a.name().clone();
    let closed_base = closed_space(base.clone());
    let test = host_fn_name(move |u_name| {
        let leftover = pointwise_binary(&or_fn_name(), &a_name, u_name);
        witness(&Point::new(closed_base.clone(), leftover)).into_name()
    });
    Ok(CompactSet::new(base, test))
}

/// `IsFull(U) = ContainedIn(K, U)` for the registered whole-space compact.
pub fn is_full(u: &OpenSet, k: &CompactSet) -> KernelResult<Point> {
    contained_in(k, u)
}

/// `IsCover((U_n)) = IsFull(⋃ U_n)`.
pub fn is_cover(us: &Point, k: &CompactSet) -> KernelResult<Point> {
    let union = countable_union(us)?;
    contained_in(k, &union)
}

// ---------------------------------------------------------------------------
// Finite subcovers
// ---------------------------------------------------------------------------

struct ComponentSpy {
    us: Point,
    max_touched: Arc<AtomicU64>,
}

/// Wrap a sequence of opens so that materializing component `i` records
/// `i`; the host-level analogue of watching which input prefix a machine
/// read before confirming.
fn spy_sequence(us: &Point, base: &Space) -> (Point, Arc<AtomicU64>) {
    let max_touched = Arc::new(AtomicU64::new(0));
    let spy = ComponentSpy {
        us: us.clone(),
        max_touched: max_touched.clone(),
    };
    let point = crate::spaces::host_fn_point(
        crate::spaces::nat_space(),
        open_space(base.clone()),
        move |n_name| {
            let mut throwaway = FuelMeter::new(1_024);
            if let Ok(Some((block, _))) = n_name.split_block(&mut throwaway) {
                if let Some(i) = block.to_u64() {
                    spy.max_touched.fetch_max(i, Ordering::Relaxed);
                }
            }
            apply_name(spy.us.name(), n_name)
        },
    );
    (point, max_touched)
}

/// A cover index: the least `N` (found by instrumentation, then validated
/// downward) such that `U_0 ∪ … ∪ U_N` still covers `K`. Fails with fuel
/// exhaustion when the cover premise cannot be confirmed in budget.
pub fn finite_subcover(us: &Point, k: &CompactSet, fuel: u64) -> KernelResult<u64> {
    let base = k.base();
    let (spied, max_touched) = spy_sequence(us, &base);
    let cover = is_cover(&spied, k)?;
    if !crate::spaces::sierp_observe(&cover, fuel).is_confirmed() {
        return Err(KernelError::Interrupted(Interrupt::FuelExhausted));
    }
    let upper = max_touched.load(Ordering::Relaxed);
    for candidate in 0..=upper {
        if truncated_cover_confirms(us, k, &base, candidate, fuel)? {
            return Ok(candidate);
        }
    }
    Err(KernelError::Interrupted(Interrupt::FuelExhausted))
}

/// Re-check a cover truncated after `n` (later components replaced by ∅).
pub fn truncated_cover_confirms(
    us: &Point,
    k: &CompactSet,
    base: &Space,
    n: u64,
    fuel: u64,
) -> KernelResult<bool> {
    let us = us.clone();
    let base_for_seq = base.clone();
    let truncated = seq_point(open_space(base.clone()), move |i| {
        if i <= n {
            Point::new(
                open_space(base_for_seq.clone()),
                apply_name(us.name(), &Name::nat(i)),
            )
        } else {
            empty_open(base_for_seq.clone()).point().clone()
        }
    });
    let check = is_cover(&truncated, k)?;
    Ok(crate::spaces::sierp_observe(&check, fuel).is_confirmed())
}

// ---------------------------------------------------------------------------
// Open relations
// ---------------------------------------------------------------------------

/// `∀(R, K) = {y | ∀x ∈ K (x, y) ∈ R}`.
pub fn forall_rel(r: &OpenSet, k: &CompactSet) -> KernelResult<OpenSet> {
    let SpaceKind::Product(x_space, y_space) = r.base().kind().clone() else {
        return Err(KernelError::DescriptorMismatch {
            expected: "an open relation on a product".into(),
            found: format!("{:?}", r.base()),
        });
    };
    expect_base(&x_space, &k.base())?;
    let k_name = k.name().clone();
    let r_name = r.name().clone();
    let test = host_fn_name(move |y| apply_name(&k_name, &cut_name(y, &r_name)));
    Ok(OpenSet::from_point(Point::new(open_space(y_space), test))
        .expect("constructed as an open set"))
}

/// `⋂ : K(O(Y)) → O(Y)`: intersect a compact family of opens.
pub fn k_countable_intersection_of_opens(k: &CompactSet) -> KernelResult<OpenSet> {
    let SpaceKind::Open(y_space) = k.base().kind().clone() else {
        return Err(KernelError::DescriptorMismatch {
            expected: "a compact family of open sets".into(),
            found: format!("{:?}", k.base()),
        });
    };
    let k_name = k.name().clone();
    let test = host_fn_name(move |y| {
        let y = y.clone();
        // {U | y ∈ U} is open in O(Y); the family is inside it iff y is in
        // every member.
        let membership_at_y = host_fn_name(move |u_name| apply_name(u_name, &y));
        apply_name(&k_name, &membership_at_y)
    });
    Ok(
        OpenSet::from_point(Point::new(open_space(y_space), test))
            .expect("constructed as an open set"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::names::Name;
    use crate::sets::{cylinder_open, full_open, member, open_union};
    use crate::spaces::{cantor_point, cantor_space, nat_point, sierp_observe};

    const FUEL: u64 = 1_000_000;

    fn observed(p: &Point, fuel: u64) -> bool {
        sierp_observe(p, fuel).is_confirmed()
    }

    #[test]
    fn whole_space_in_full() {
        let k = cantor_as_compact();
        let s = contained_in(&k, &full_open(cantor_space())).unwrap();
        assert!(observed(&s, 100_000));
    }

    #[test]
    fn case_split_cover_confirms_at_depth_one() {
        let k = cantor_as_compact();
        let u = open_union(&cylinder_open(0, false), &cylinder_open(0, true)).unwrap();
        let (name, depth) = koenig_contained_instrumented(&CantorTree, u.name().clone());
        assert!(
            sierp_observe(&sierp_point(name), 100_000).is_confirmed(),
            "case-split cover must confirm"
        );
        assert_eq!(depth.load(Ordering::Relaxed), 1);
        // And through the compact-set API.
        let s = is_full(&u, &k).unwrap();
        assert!(observed(&s, 100_000));
    }

    #[test]
    fn single_cylinder_is_not_full() {
        let k = cantor_as_compact();
        let s = is_full(&cylinder_open(0, true), &k).unwrap();
        assert!(!observed(&s, FUEL));
    }

    #[test]
    fn emptiness_of_closed_sets() {
        // The set rejecting everything whose bit 1 is anything: empty.
        let depth_two = open_union(&cylinder_open(1, false), &cylinder_open(1, true)).unwrap();
        let empty = crate::sets::complement(&depth_two);
        assert!(observed(&is_empty_closed_cantor(&empty), 100_000));

        // {0^ω} as the complement of "some bit is one": never empty.
        let some_one = crate::sets::host_open(cantor_space(), |p| {
            let p = p.clone();
            crate::search::dovetail_or(None, move |i| {
                let p = p.clone();
                crate::search::search_name(BitProbe { name: p, idx: i, done: false })
            })
        });
        let singleton = crate::sets::complement(&some_one);
        assert!(!observed(&is_empty_closed_cantor(&singleton), FUEL));
    }

    struct BitProbe {
        name: Name,
        idx: u64,
        done: bool,
    }
    impl SearchProcess for BitProbe {
        fn step(&mut self, meter: &mut FuelMeter) -> Observation<StepOutcome> {
            if self.done {
                return Ok(StepOutcome::Dead);
            }
            self.done = true;
            if self.name.bit_metered(self.idx, meter)? {
                Ok(StepOutcome::Confirmed)
            } else {
                Ok(StepOutcome::Dead)
            }
        }
    }

    #[test]
    fn singleton_containment_is_membership() {
        let x = cantor_point(Name::word(vec![true, false, true]));
        let k = sat_singleton(&x);
        let u = cylinder_open(2, true);
        assert!(observed(&contained_in(&k, &u).unwrap(), FUEL));
        let v = cylinder_open(1, true);
        assert!(!observed(&contained_in(&k, &v).unwrap(), FUEL));
    }

    #[test]
    fn union_of_singletons_needs_both_covered() {
        let a = sat_singleton(&cantor_point(Name::zeros()));
        let b = sat_singleton(&cantor_point(Name::ones()));
        let both = k_union(&a, &b).unwrap();
        let u0 = cylinder_open(0, false);
        let u1 = cylinder_open(0, true);
        let cover = open_union(&u0, &u1).unwrap();
        assert!(observed(&contained_in(&both, &cover).unwrap(), FUEL));
        assert!(!observed(&contained_in(&both, &u0).unwrap(), FUEL));
    }

    #[test]
    fn image_under_identity_and_projection() {
        let x = cantor_point(Name::periodic(vec![true, false]));
        let k = sat_singleton(&x);
        let id = crate::spaces::identity_fn_point(cantor_space());
        let img = k_image(&id, &k).unwrap();
        let u = cylinder_open(0, true);
        assert_eq!(
            observed(&contained_in(&img, &u).unwrap(), FUEL),
            observed(&contained_in(&k, &u).unwrap(), FUEL)
        );

        let y = cantor_point(Name::ones());
        let pak = k_product(&sat_singleton(&x), &sat_singleton(&y));
        let back = k_project(&pak, ProductSide::Second).unwrap();
        assert!(observed(&contained_in(&back, &cylinder_open(3, true)).unwrap(), FUEL));
    }

    #[test]
    fn intersect_with_closed() {
        let x = cantor_point(Name::zeros());
        let k = sat_singleton(&x);
        // B = complement of {p(0)=1} contains 0^ω.
        let b = crate::sets::complement(&cylinder_open(0, true));
        let trimmed = k_intersect_closed(&k, &b).unwrap();
        let u = cylinder_open(0, false);
        assert!(observed(&contained_in(&trimmed, &u).unwrap(), FUEL));

        // Intersecting with the complement of a cylinder containing the
        // point empties the set: containment in anything confirms.
        let b2 = crate::sets::complement(&cylinder_open(0, false));
        let emptied = k_intersect_closed(&k, &b2).unwrap();
        let tiny = cylinder_open(5, true);
        assert!(observed(&contained_in(&emptied, &tiny).unwrap(), FUEL));
    }

    #[test]
    fn shifted_cylinder_cover_yields_six() {
        let k = cantor_as_compact();
        let us = seq_point(open_space(cantor_space()), |n| {
            if n == 0 {
                cylinder_open(5, false).point().clone()
            } else {
                cylinder_open(n - 1, true).point().clone()
            }
        });
        let n = finite_subcover(&us, &k, FUEL).unwrap();
        assert_eq!(n, 6);
        assert!(truncated_cover_confirms(&us, &k, &cantor_space(), n, FUEL).unwrap());
        assert!(!truncated_cover_confirms(&us, &k, &cantor_space(), 5, 200_000).unwrap());
    }

    #[test]
    fn constant_full_cover_yields_zero() {
        let k = cantor_as_compact();
        let us = seq_point(open_space(cantor_space()), |_| {
            full_open(cantor_space()).point().clone()
        });
        assert_eq!(finite_subcover(&us, &k, FUEL).unwrap(), 0);
    }

    #[test]
    fn forall_relation_on_products() {
        // R = {(x, y) | y(0) = 1} (ignores x): ∀x∈Cantor holds iff y(0)=1.
        let r = crate::sets::host_open(
            crate::spaces::product_space(cantor_space(), cantor_space()),
            |xy| {
                let (_, y) = unpair(xy);
                apply_name(cylinder_open(0, true).name(), &y)
            },
        );
        let all = forall_rel(&r, &cantor_as_compact()).unwrap();
        let inside = cantor_point(Name::ones());
        let outside = cantor_point(Name::zeros());
        assert!(observed(&member(&inside, &all).unwrap(), FUEL));
        assert!(!observed(&member(&outside, &all).unwrap(), FUEL));
    }

    #[test]
    fn intersection_over_compact_family() {
        let u = cylinder_open(0, true);
        let v = cylinder_open(1, true);
        let family = k_union(
            &sat_singleton(u.point()),
            &sat_singleton(v.point()),
        )
        .unwrap();
        let family = CompactSet::from_point(
            family
                .point()
                .relabel(compact_space(open_space(cantor_space()))),
        )
        .unwrap();
        let meet = k_countable_intersection_of_opens(&family).unwrap();
        let both = cantor_point(Name::ones());
        let one = cantor_point(Name::periodic(vec![true, false]));
        assert!(observed(&member(&both, &meet).unwrap(), FUEL));
        assert!(!observed(&member(&one, &meet).unwrap(), FUEL));
    }

    #[test]
    fn proj_point_spaces_line_up() {
        // Guards the projection descriptor plumbing used by k_project.
        let p = crate::spaces::make_product(&nat_point(1), &nat_point(2));
        let (a, b) = crate::spaces::split_product(&p);
        assert_eq!(crate::spaces::nat_decode(&a, FUEL).unwrap(), 1);
        assert_eq!(crate::spaces::nat_decode(&b, FUEL).unwrap(), 2);
    }
}
