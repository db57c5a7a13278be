//! Sierpiński logic and the spaces of open and closed sets.
//!
//! Opens and closeds share the name format of `C(X, S)`; the descriptor is
//! the polarity flag. For an open set ⊤ means member, for a closed set ⊤
//! means non-member, and complement is the identity on names.
//!
//! Binary ∧ and ∨ are honest machine programs that scan an interleaved
//! pair of Sierpiński names, writing 0s until they have seen enough. The
//! countable disjunction dovetails its components with quadratic fairness.

use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;

use crate::error::{KernelError, KernelResult};
use crate::names::{pair, Name};
use crate::search::dovetail_or;
use crate::spaces::{
    closed_space, function_space, nat_space, open_space, sierp_point, sierp_space, Point, Space,
    SpaceKind,
};
use crate::t2vm::{
    apply_name, assemble, function_name, machine_output, register_host, Builtin, HostRealizer,
    MachineIndex, Program,
};

// ---------------------------------------------------------------------------
// Sierpiński gates
// ---------------------------------------------------------------------------

/// The ∧ machine: writes 0s until both components of the interleaved input
/// have shown a 1, then writes 1s.
pub fn and_program() -> Arc<Program> {
    static CELL: OnceLock<Arc<Program>> = OnceLock::new();
    CELL.get_or_init(|| {
        Arc::new(
            assemble(
                "\
                const r3 2\n\
                const r7 1\n\
                const r2 1\n\
                loop: readinput r0 r1\n\
                jz r0 skipa\n\
                move r4 r7\n\
                skipa: readinput r0 r2\n\
                jz r0 skipb\n\
                move r5 r7\n\
                skipb: move r6 r4\n\
                add r6 r5\n\
                subsat r6 r7\n\
                jz r6 emit0\n\
                ones: write r7\n\
                jmp ones\n\
                emit0: const r6 0\n\
                write r6\n\
                add r1 r3\n\
                add r2 r3\n\
                jmp loop\n",
            )
            .expect("and machine assembles"),
        )
    })
    .clone()
}

/// The ∨ machine: writes 0s until either component shows a 1.
pub fn or_program() -> Arc<Program> {
    static CELL: OnceLock<Arc<Program>> = OnceLock::new();
    CELL.get_or_init(|| {
        Arc::new(
            assemble(
                "\
                const r3 2\n\
                const r7 1\n\
                const r2 1\n\
                loop: readinput r0 r1\n\
                jz r0 skipa\n\
                move r4 r7\n\
                skipa: readinput r0 r2\n\
                jz r0 skipb\n\
                move r5 r7\n\
                skipb: move r6 r4\n\
                add r6 r5\n\
                jz r6 emit0\n\
                ones: write r7\n\
                jmp ones\n\
                emit0: const r6 0\n\
                write r6\n\
                add r1 r3\n\
                add r2 r3\n\
                jmp loop\n",
            )
            .expect("or machine assembles"),
        )
    })
    .clone()
}

fn sierp_pair_space() -> Space {
    crate::spaces::product_space(sierp_space(), sierp_space())
}

/// `∧ : S × S → S` as a function point.
pub fn and_fn_point() -> Point {
    crate::spaces::make_function_from_program(
        &and_program(),
        Name::zeros(),
        sierp_pair_space(),
        sierp_space(),
    )
}

/// `∨ : S × S → S` as a function point.
pub fn or_fn_point() -> Point {
    crate::spaces::make_function_from_program(
        &or_program(),
        Name::zeros(),
        sierp_pair_space(),
        sierp_space(),
    )
}

/// Conjunction of two Sierpiński points.
pub fn sierp_and(a: &Point, b: &Point) -> Point {
    let input = pair(a.name().clone(), b.name().clone());
    sierp_point(machine_output(and_program(), Name::zeros(), input))
}

/// Disjunction of two Sierpiński points.
pub fn sierp_or(a: &Point, b: &Point) -> Point {
    let input = pair(a.name().clone(), b.name().clone());
    sierp_point(machine_output(or_program(), Name::zeros(), input))
}

/// `⋁ : C(ℕ, S) → S`: fair dovetailing over the components.
pub fn sierp_countable_or(xs: &Point) -> Point {
    let xs_name = xs.name().clone();
    sierp_point(dovetail_or(None, move |i| {
        apply_name(&xs_name, &Name::nat(i))
    }))
}

/// `⋁` as a function point of `C(C(ℕ, S), S)`.
pub fn big_or_fn_point() -> Point {
    struct BigOr;
    impl HostRealizer for BigOr {
        fn apply(&self, _oracle: &Name, input: &Name) -> Name {
            let xs = input.clone();
            dovetail_or(None, move |i| apply_name(&xs, &Name::nat(i)))
        }
        fn label(&self) -> &'static str {
            "big-or"
        }
    }
    static INDEX: OnceLock<BigUint> = OnceLock::new();
    let idx = INDEX
        .get_or_init(|| MachineIndex::host(register_host(Arc::new(BigOr))).0)
        .clone();
    Point::new(
        function_space(function_space(nat_space(), sierp_space()), sierp_space()),
        Name::padded(idx, Name::zeros()),
    )
}

// ---------------------------------------------------------------------------
// Open and closed sets
// ---------------------------------------------------------------------------

/// An open subset of its base space: a `C(X, S)` name where ⊤ means member.
#[derive(Clone, Debug)]
pub struct OpenSet(Point);

/// A closed subset: the same name format, ⊤ means non-member.
#[derive(Clone, Debug)]
pub struct ClosedSet(Point);

impl OpenSet {
    pub fn from_point(p: Point) -> KernelResult<Self> {
        match p.space().kind() {
            SpaceKind::Open(_) => Ok(OpenSet(p)),
            SpaceKind::Function(d, c) if *c == sierp_space() => {
                Ok(OpenSet(p.relabel(open_space(d.clone()))))
            }
            _ => Err(KernelError::DescriptorMismatch {
                expected: "an open-set point".into(),
                found: format!("{:?}", p.space()),
            }),
        }
    }

    pub fn base(&self) -> Space {
        match self.0.space().kind() {
            SpaceKind::Open(x) => x.clone(),
            _ => unreachable!("open sets carry Open descriptors"),
        }
    }

    pub fn point(&self) -> &Point {
        &self.0
    }

    pub fn name(&self) -> &Name {
        self.0.name()
    }
}

impl ClosedSet {
    pub fn from_point(p: Point) -> KernelResult<Self> {
        match p.space().kind() {
            SpaceKind::Closed(_) => Ok(ClosedSet(p)),
            SpaceKind::Function(d, c) if *c == sierp_space() => {
                Ok(ClosedSet(p.relabel(closed_space(d.clone()))))
            }
            _ => Err(KernelError::DescriptorMismatch {
                expected: "a closed-set point".into(),
                found: format!("{:?}", p.space()),
            }),
        }
    }

    pub fn base(&self) -> Space {
        match self.0.space().kind() {
            SpaceKind::Closed(x) => x.clone(),
            _ => unreachable!("closed sets carry Closed descriptors"),
        }
    }

    pub fn point(&self) -> &Point {
        &self.0
    }

    pub fn name(&self) -> &Name {
        self.0.name()
    }
}

/// Open set from a host membership test producing Sierpiński names.
pub fn host_open(base: Space, test: impl Fn(&Name) -> Name + Send + Sync + 'static) -> OpenSet {
    OpenSet(crate::spaces::host_sierp_fn(base.clone(), test).relabel(open_space(base)))
}

/// Closed set from a host non-membership test.
pub fn host_closed(base: Space, test: impl Fn(&Name) -> Name + Send + Sync + 'static) -> ClosedSet {
    ClosedSet(crate::spaces::host_sierp_fn(base.clone(), test).relabel(closed_space(base)))
}

/// The whole space as an open set: membership always confirms.
pub fn full_open(base: Space) -> OpenSet {
    let name = Name::padded(
        Builtin::ConstFn.machine_index(),
        sierp_top_name(),
    );
    OpenSet(Point::new(open_space(base), name))
}

/// The empty open set: membership stays ⊥, productively.
pub fn empty_open(base: Space) -> OpenSet {
    let name = Name::padded(Builtin::ConstFn.machine_index(), Name::zeros());
    OpenSet(Point::new(open_space(base), name))
}

/// The whole space as a closed set.
pub fn full_closed(base: Space) -> ClosedSet {
    complement_open_name(empty_open(base))
}

/// The empty closed set.
pub fn empty_closed(base: Space) -> ClosedSet {
    complement_open_name(full_open(base))
}

fn sierp_top_name() -> Name {
    Name::word(vec![true])
}

/// Complement: polarity flip, the name is untouched.
pub fn complement(u: &OpenSet) -> ClosedSet {
    ClosedSet(u.0.relabel(closed_space(u.base())))
}

/// Complement of a closed set.
pub fn complement_closed(a: &ClosedSet) -> OpenSet {
    OpenSet(a.0.relabel(open_space(a.base())))
}

fn complement_open_name(u: OpenSet) -> ClosedSet {
    ClosedSet(u.0.relabel(closed_space(u.base())))
}

/// `x ∈ U` as a Sierpiński point; a specialization of eval.
pub fn member(x: &Point, u: &OpenSet) -> KernelResult<Point> {
    expect_same_base(x.space(), &u.base())?;
    Ok(sierp_point(apply_name(u.name(), x.name())))
}

/// `x ∉ A` as a Sierpiński point.
pub fn excluded(x: &Point, a: &ClosedSet) -> KernelResult<Point> {
    expect_same_base(x.space(), &a.base())?;
    Ok(sierp_point(apply_name(a.name(), x.name())))
}

fn expect_same_base(found: &Space, expected: &Space) -> KernelResult<()> {
    if found == expected {
        Ok(())
    } else {
        Err(KernelError::DescriptorMismatch {
            expected: format!("{expected:?}"),
            found: format!("{found:?}"),
        })
    }
}

/// `f ∘ g` on raw function names.
pub(crate) fn compose_names(f: &Name, g: &Name) -> Name {
    Name::padded(
        Builtin::Compose.machine_index(),
        pair(f.clone(), g.clone()),
    )
}

/// The pointwise combination `gate ∘ (f × g) ∘ Δ` as a function name.
pub(crate) fn pointwise_binary(gate: &Name, f: &Name, g: &Name) -> Name {
    let product = Name::padded(
        Builtin::Product.machine_index(),
        pair(f.clone(), g.clone()),
    );
    let diagonal = Name::padded(Builtin::Diagonal.machine_index(), Name::zeros());
    compose_names(gate, &compose_names(&product, &diagonal))
}

pub(crate) fn and_fn_name() -> Name {
    function_name(&MachineIndex::of_program(&and_program()), Name::zeros())
}

pub(crate) fn or_fn_name() -> Name {
    function_name(&MachineIndex::of_program(&or_program()), Name::zeros())
}

/// Union of opens: membership in either.
pub fn open_union(u: &OpenSet, v: &OpenSet) -> KernelResult<OpenSet> {
    expect_same_base(&v.base(), &u.base())?;
    Ok(OpenSet(Point::new(
        open_space(u.base()),
        pointwise_binary(&or_fn_name(), u.name(), v.name()),
    )))
}

/// Intersection of opens: membership in both.
pub fn open_intersection(u: &OpenSet, v: &OpenSet) -> KernelResult<OpenSet> {
    expect_same_base(&v.base(), &u.base())?;
    Ok(OpenSet(Point::new(
        open_space(u.base()),
        pointwise_binary(&and_fn_name(), u.name(), v.name()),
    )))
}

/// Union of closeds: non-membership in both.
pub fn closed_union(a: &ClosedSet, b: &ClosedSet) -> KernelResult<ClosedSet> {
    expect_same_base(&b.base(), &a.base())?;
    Ok(ClosedSet(Point::new(
        closed_space(a.base()),
        pointwise_binary(&and_fn_name(), a.name(), b.name()),
    )))
}

/// Intersection of closeds: non-membership in either.
pub fn closed_intersection(a: &ClosedSet, b: &ClosedSet) -> KernelResult<ClosedSet> {
    expect_same_base(&b.base(), &a.base())?;
    Ok(ClosedSet(Point::new(
        closed_space(a.base()),
        pointwise_binary(&or_fn_name(), a.name(), b.name()),
    )))
}

fn union_seq_index() -> BigUint {
    struct UnionSeq;
    impl HostRealizer for UnionSeq {
        fn apply(&self, oracle: &Name, input: &Name) -> Name {
            let us = oracle.clone();
            let x = input.clone();
            dovetail_or(None, move |i| {
                apply_name(&apply_name(&us, &Name::nat(i)), &x)
            })
        }
        fn label(&self) -> &'static str {
            "union-seq"
        }
    }
    static INDEX: OnceLock<BigUint> = OnceLock::new();
    INDEX
        .get_or_init(|| MachineIndex::host(register_host(Arc::new(UnionSeq))).0)
        .clone()
}

/// Base space of a `C(ℕ, O(X))` (or closed) sequence point.
fn seq_open_base(us: &Point, closed: bool) -> KernelResult<Space> {
    let err = || KernelError::DescriptorMismatch {
        expected: if closed {
            "a sequence of closed sets C(Nat, A(X))".into()
        } else {
            "a sequence of open sets C(Nat, O(X))".into()
        },
        found: format!("{:?}", us.space()),
    };
    let SpaceKind::Function(dom, cod) = us.space().kind() else {
        return Err(err());
    };
    if *dom != nat_space() {
        return Err(err());
    }
    match (cod.kind(), closed) {
        (SpaceKind::Open(x), false) | (SpaceKind::Closed(x), true) => Ok(x.clone()),
        _ => Err(err()),
    }
}

/// `⋃ : C(ℕ, O(X)) → O(X)`.
pub fn countable_union(us: &Point) -> KernelResult<OpenSet> {
    let base = seq_open_base(us, false)?;
    Ok(OpenSet(Point::new(
        open_space(base),
        Name::padded(union_seq_index(), us.name().clone()),
    )))
}

/// `⋂ : C(ℕ, A(X)) → A(X)`, by de Morgan over [`countable_union`]: the
/// complement flips are identities on names, so the result shares its name
/// with the union of the pointwise complements.
pub fn countable_intersection(as_seq: &Point) -> KernelResult<ClosedSet> {
    let base = seq_open_base(as_seq, true)?;
    let opens = as_seq.relabel(function_space(nat_space(), open_space(base.clone())));
    let union = countable_union(&opens)?;
    Ok(ClosedSet(
        union.0.relabel(closed_space(base)),
    ))
}

/// `f⁻¹(U)`: composition of the membership test with `f`.
pub fn preimage(f: &Point, u: &OpenSet) -> KernelResult<OpenSet> {
    let Some((dom, cod)) = f.space().as_function() else {
        return Err(KernelError::DescriptorMismatch {
            expected: "a function-space point".into(),
            found: format!("{:?}", f.space()),
        });
    };
    expect_same_base(&cod, &u.base())?;
    Ok(OpenSet(Point::new(
        open_space(dom),
        compose_names(u.name(), f.name()),
    )))
}

/// `A × B` as a closed subset of the product: a pair escapes when either
/// coordinate escapes its factor.
pub fn closed_product(a: &ClosedSet, b: &ClosedSet) -> ClosedSet {
    let base = crate::spaces::product_space(a.base(), b.base());
    // (x, y) ↦ ∨(A(x), B(y)) = ∨ ∘ (A × B).
    let product = Name::padded(
        Builtin::Product.machine_index(),
        pair(a.name().clone(), b.name().clone()),
    );
    ClosedSet(Point::new(
        closed_space(base),
        compose_names(&or_fn_name(), &product),
    ))
}

/// Fix the second coordinate of an open subset of a product:
/// `cut(y, U) = {x | (x, y) ∈ U}`.
pub fn cut(y: &Point, u: &OpenSet) -> KernelResult<OpenSet> {
    let SpaceKind::Product(x_space, y_space) = u.base().kind().clone() else {
        return Err(KernelError::DescriptorMismatch {
            expected: "an open subset of a product".into(),
            found: format!("{:?}", u.base()),
        });
    };
    expect_same_base(y.space(), &y_space)?;
    Ok(OpenSet(Point::new(
        open_space(x_space),
        cut_name(y.name(), u.name()),
    )))
}

/// Name-level cut: `partial(y, U ∘ swap)`.
pub(crate) fn cut_name(y: &Name, u: &Name) -> Name {
    let swap = function_name(
        &MachineIndex::of_program(&crate::spaces::swap_program()),
        Name::zeros(),
    );
    let flipped = compose_names(u, &swap);
    Name::padded(
        Builtin::Partial.machine_index(),
        pair(flipped, y.clone()),
    )
}

fn seq_closed_product_index() -> BigUint {
    struct SeqProd;
    impl HostRealizer for SeqProd {
        fn apply(&self, oracle: &Name, input: &Name) -> Name {
            let components = oracle.clone();
            let sequence = input.clone();
            dovetail_or(None, move |n| {
                let coordinate = apply_name(&sequence, &Name::nat(n));
                apply_name(&apply_name(&components, &Name::nat(n)), &coordinate)
            })
        }
        fn label(&self) -> &'static str {
            "seq-closed-product"
        }
    }
    static INDEX: OnceLock<BigUint> = OnceLock::new();
    INDEX
        .get_or_init(|| MachineIndex::host(register_host(Arc::new(SeqProd))).0)
        .clone()
}

/// `Π : C(ℕ, A(X)) → A(C(ℕ, X))`: a sequence is rejected as soon as some
/// coordinate is rejected by its factor.
pub fn seq_closed_product(as_seq: &Point) -> KernelResult<ClosedSet> {
    let base = seq_open_base(as_seq, true)?;
    let seq_space = function_space(nat_space(), base);
    Ok(ClosedSet(Point::new(
        closed_space(seq_space),
        Name::padded(seq_closed_product_index(), as_seq.name().clone()),
    )))
}

// ---------------------------------------------------------------------------
// Concrete opens on Cantor space
// ---------------------------------------------------------------------------

/// The cylinder `{p | p(pos) = bit}` as a machine-realized open set.
pub fn cylinder_open(pos: u64, bit: bool) -> OpenSet {
    let mut src = format!("const r1 {pos}\nreadinput r0 r1\n");
    if !bit {
        src.push_str("const r2 1\nsubsat r2 r0\nmove r0 r2\n");
    }
    src.push_str("jz r0 emit0\nones: const r2 1\nwrite r2\njmp ones\nemit0: const r2 0\nwrite r2\njmp emit0\n");
    let program = assemble(&src).expect("cylinder program assembles");
    let p = crate::spaces::make_function_from_program(
        &program,
        Name::zeros(),
        crate::spaces::cantor_space(),
        sierp_space(),
    );
    OpenSet(p.relabel(open_space(crate::spaces::cantor_space())))
}

/// A sequence point `C(ℕ, E)` from a host supplier of points.
pub fn seq_point(elem_space: Space, supplier: impl Fn(u64) -> Point + Send + Sync + 'static) -> Point {
    let names = crate::names::tuple_seq(move |i| supplier(i).into_name());
    seq_point_from_tuple(elem_space, names)
}

fn seq_from_tuple_index() -> BigUint {
    struct SeqFromTuple;
    impl HostRealizer for SeqFromTuple {
        fn apply(&self, oracle: &Name, input: &Name) -> Name {
            struct RowAt {
                tuple: Name,
                arg: Name,
                resolved: std::sync::Mutex<Option<Name>>,
            }
            impl RowAt {
                fn row(&self, meter: &mut crate::fuel::FuelMeter) -> crate::fuel::Observation<Name> {
                    let mut slot = self.resolved.lock().unwrap();
                    if let Some(row) = &*slot {
                        return Ok(row.clone());
                    }
                    let n = self.arg.read_block(0, meter)?;
                    let n = num_traits::ToPrimitive::to_u64(&n)
                        .ok_or(crate::fuel::Interrupt::FuelExhausted)?;
                    let row = crate::names::project_seq(&self.tuple, n);
                    *slot = Some(row.clone());
                    Ok(row)
                }
            }
            impl crate::names::NameFn for RowAt {
                fn bit(
                    &self,
                    idx: u64,
                    meter: &mut crate::fuel::FuelMeter,
                ) -> crate::fuel::Observation<bool> {
                    let row = self.row(meter)?;
                    row.bit_metered(idx, meter)
                }
                fn split_block(
                    &self,
                    meter: &mut crate::fuel::FuelMeter,
                ) -> crate::fuel::Observation<Option<(BigUint, Name)>> {
                    let row = self.row(meter)?;
                    row.split_block(meter)
                }
                fn label(&self) -> &'static str {
                    "seq-row"
                }
            }
            Name::custom(Arc::new(RowAt {
                tuple: oracle.clone(),
                arg: input.clone(),
                resolved: std::sync::Mutex::new(None),
            }))
        }
        fn label(&self) -> &'static str {
            "seq-from-tuple"
        }
    }
    static INDEX: OnceLock<BigUint> = OnceLock::new();
    INDEX
        .get_or_init(|| MachineIndex::host(register_host(Arc::new(SeqFromTuple))).0)
        .clone()
}

/// A sequence point whose oracle is the countable tupling of the row names.
pub fn seq_point_from_tuple(elem_space: Space, tuple: Name) -> Point {
    Point::new(
        function_space(nat_space(), elem_space),
        Name::padded(seq_from_tuple_index(), tuple),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{cantor_point, cantor_space, sierp_bottom, sierp_observe, sierp_top};

    const FUEL: u64 = 1_000_000;

    fn top_at(k: usize) -> Point {
        let mut bits = vec![false; k];
        bits.push(true);
        sierp_point(Name::word(bits))
    }

    #[test]
    fn and_truth_table() {
        assert!(sierp_observe(&sierp_and(&top_at(3), &top_at(5)), 1_000).is_confirmed());
        assert!(!sierp_observe(&sierp_and(&top_at(3), &sierp_bottom()), FUEL).is_confirmed());
        assert!(!sierp_observe(&sierp_and(&sierp_bottom(), &sierp_bottom()), FUEL).is_confirmed());
    }

    #[test]
    fn or_truth_table() {
        assert!(sierp_observe(&sierp_or(&sierp_bottom(), &top_at(9)), 1_000).is_confirmed());
        assert!(sierp_observe(&sierp_or(&top_at(0), &sierp_bottom()), 1_000).is_confirmed());
        assert!(!sierp_observe(&sierp_or(&sierp_bottom(), &sierp_bottom()), FUEL).is_confirmed());
    }

    #[test]
    fn countable_or_finds_deep_component() {
        let xs = seq_point(sierp_space(), |i| {
            if i == 17 {
                top_at(2)
            } else {
                sierp_bottom()
            }
        });
        assert!(sierp_observe(&sierp_countable_or(&xs), FUEL).is_confirmed());
        let none = seq_point(sierp_space(), |_| sierp_bottom());
        assert!(!sierp_observe(&sierp_countable_or(&none), FUEL).is_confirmed());
    }

    #[test]
    fn member_of_cylinder() {
        let u = cylinder_open(2, true);
        let inside = cantor_point(Name::word(vec![false, false, true]));
        let outside = cantor_point(Name::zeros());
        assert!(sierp_observe(&member(&inside, &u).unwrap(), FUEL).is_confirmed());
        assert!(!sierp_observe(&member(&outside, &u).unwrap(), FUEL).is_confirmed());
    }

    #[test]
    fn member_of_full_and_empty() {
        let x = cantor_point(Name::zeros());
        assert!(sierp_observe(&member(&x, &full_open(cantor_space())).unwrap(), 1_000)
            .is_confirmed());
        assert!(!sierp_observe(&member(&x, &empty_open(cantor_space())).unwrap(), FUEL)
            .is_confirmed());
    }

    #[test]
    fn union_and_intersection_on_cylinders() {
        let u = cylinder_open(0, true);
        let v = cylinder_open(1, true);
        let both = open_intersection(&u, &v).unwrap();
        let either = open_union(&u, &v).unwrap();

        let ten = cantor_point(Name::periodic(vec![true, false]));
        let eleven = cantor_point(Name::ones());
        assert!(!sierp_observe(&member(&ten, &both).unwrap(), FUEL).is_confirmed());
        assert!(sierp_observe(&member(&eleven, &both).unwrap(), FUEL).is_confirmed());
        assert!(sierp_observe(&member(&ten, &either).unwrap(), FUEL).is_confirmed());
    }

    #[test]
    fn complement_is_identity_on_names() {
        let u = cylinder_open(1, false);
        let a = complement(&u);
        assert!(u.name().same_object(a.name()));
        let back = complement_closed(&a);
        assert!(back.name().same_object(u.name()));
    }

    #[test]
    fn countable_union_hits_component() {
        let us = seq_point(open_space(cantor_space()), |n| {
            cylinder_open(n, true).point().clone()
        });
        let union = countable_union(&us).unwrap();
        let x = cantor_point(Name::nat(5));
        assert!(sierp_observe(&member(&x, &union).unwrap(), FUEL).is_confirmed());
        let zero = cantor_point(Name::zeros());
        assert!(!sierp_observe(&member(&zero, &union).unwrap(), FUEL).is_confirmed());
    }

    #[test]
    fn de_morgan_shares_names() {
        let as_seq = seq_point(closed_space(cantor_space()), |n| {
            complement(&cylinder_open(n, true)).point().clone()
        });
        let lhs = countable_intersection(&as_seq).unwrap();
        let opens = as_seq.relabel(function_space(nat_space(), open_space(cantor_space())));
        let rhs = complement(&countable_union(&opens).unwrap());
        assert!(lhs.name().same_object(rhs.name()));
    }

    #[test]
    fn preimage_respects_composition() {
        let id = crate::spaces::identity_fn_point(cantor_space());
        let u = cylinder_open(1, true);
        let pre = preimage(&id, &u).unwrap();
        let x = cantor_point(Name::word(vec![false, true]));
        assert!(sierp_observe(&member(&x, &pre).unwrap(), FUEL).is_confirmed());
    }

    #[test]
    fn cut_slices_products() {
        // U = {(x, y) | x(0) = 1}, sliced at any y leaves the cylinder.
        let u_fn = crate::spaces::host_sierp_fn(
            crate::spaces::product_space(cantor_space(), cantor_space()),
            |xy| {
                let (x, _) = crate::names::unpair(xy);
                apply_name(cylinder_open(0, true).name(), &x)
            },
        );
        let u = OpenSet::from_point(u_fn).unwrap();
        let y = cantor_point(Name::zeros());
        let sliced = cut(&y, &u).unwrap();
        let inside = cantor_point(Name::ones());
        assert!(sierp_observe(&member(&inside, &sliced).unwrap(), FUEL).is_confirmed());
        let outside = cantor_point(Name::zeros());
        assert!(!sierp_observe(&member(&outside, &sliced).unwrap(), FUEL).is_confirmed());
    }

    #[test]
    fn seq_closed_product_rejects_by_coordinate() {
        // A_3 is empty: every sequence is rejected through coordinate 3.
        let as_seq = seq_point(closed_space(cantor_space()), |n| {
            if n == 3 {
                empty_closed(cantor_space()).point().clone()
            } else {
                full_closed(cantor_space()).point().clone()
            }
        });
        let product = seq_closed_product(&as_seq).unwrap();
        let xs = seq_point(cantor_space(), |_| cantor_point(Name::zeros()));
        assert!(sierp_observe(&excluded(&xs, &product).unwrap(), FUEL).is_confirmed());

        let all_full = seq_point(closed_space(cantor_space()), |_| {
            full_closed(cantor_space()).point().clone()
        });
        let product = seq_closed_product(&all_full).unwrap();
        assert!(!sierp_observe(&excluded(&xs, &product).unwrap(), FUEL).is_confirmed());
    }
}
