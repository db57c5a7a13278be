//! Overt sets: closed sets by positive information.
//!
//! An overt set semidecides *intersection* with open sets, dually to a
//! compact set semideciding containment. Overtness witnesses are dense
//! sequences: testing every sequence element against an open set in a fair
//! dovetail detects non-emptiness whenever it holds.

use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;

use crate::error::{KernelError, KernelResult};
use crate::names::{pair, unpair, Name};
use crate::search::dovetail_or;
use crate::sets::{compose_names, cut_name, open_intersection, pointwise_binary, OpenSet};
use crate::spaces::{
    host_fn_name, open_space, overt_space, sierp_point, Point, Space, SpaceKind,
};
use crate::t2vm::{apply_name, register_host, HostRealizer, MachineIndex};

/// An overt subset of its base space.
#[derive(Clone, Debug)]
pub struct OvertSet(Point);

impl OvertSet {
    pub fn from_point(p: Point) -> KernelResult<Self> {
        match p.space().kind() {
            SpaceKind::Overt(_) => Ok(OvertSet(p)),
            _ => Err(KernelError::DescriptorMismatch {
                expected: "an overt-set point".into(),
                found: format!("{:?}", p.space()),
            }),
        }
    }

    pub fn new(base: Space, name: Name) -> Self {
        OvertSet(Point::new(overt_space(base), name))
    }

    pub fn base(&self) -> Space {
        match self.0.space().kind() {
            SpaceKind::Overt(x) => x.clone(),
            _ => unreachable!("overt sets carry Overt descriptors"),
        }
    }

    pub fn point(&self) -> &Point {
        &self.0
    }

    pub fn name(&self) -> &Name {
        self.0.name()
    }
}

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

/// `Intersects : V(X) × O(X) → S`; an instantiation of eval.
pub fn intersects(a: &OvertSet, u: &OpenSet) -> KernelResult<Point> {
    expect_base(&u.base(), &a.base())?;
    Ok(sierp_point(apply_name(a.name(), u.name())))
}

/// The i-th eventually-zero word: the binary digits of `i`, least
/// significant first, then zeros. Dense in Cantor space.
pub fn cantor_dense_point(i: u64) -> Point {
    let bits = crate::t2vm::isa::nat_to_bits(&BigUint::from(i));
    crate::spaces::cantor_point(Name::word(bits))
}

/// Non-emptiness of open sets from a dense sequence: the overtness
/// witness. Dovetails membership of every sequence element.
pub fn nonempty_witness(
    dense: Arc<crate::spaces::DenseSeq>,
) -> impl Fn(&OpenSet) -> Point + Send + Sync {
    move |u: &OpenSet| {
        let u_name = u.name().clone();
        let dense = dense.clone();
        sierp_point(dovetail_or(None, move |i| {
            apply_name(&u_name, dense(i).name())
        }))
    }
}

/// The whole space as an overt set, from its registered dense sequence.
pub fn whole_space_overt(space: &Space) -> KernelResult<OvertSet> {
    let dense = space
        .caps()
        .overt
        .clone()
        .ok_or_else(|| KernelError::MissingCapability {
            space: format!("{space:?}"),
            capability: "overt",
        })?;
    let test = host_fn_name(move |u_name| {
        let u_name = u_name.clone();
        let dense = dense.clone();
        dovetail_or(None, move |i| apply_name(&u_name, dense(i).name()))
    });
    Ok(OvertSet::new(space.clone(), test))
}

/// Closure of an open set as an overt set: it meets U iff U ∩ V is
/// non-empty.
pub fn closure_of_open(v: &OpenSet) -> KernelResult<OvertSet> {
    let base = v.base();
    let dense = base
        .caps()
        .overt
        .clone()
        .ok_or_else(|| KernelError::MissingCapability {
            space: format!("{base:?}"),
            capability: "overt",
        })?;
    let v = v.clone();
    let test = host_fn_name(move |u_name| {
        let u = OpenSet::from_point(Point::new(
            open_space(v.base()),
            u_name.clone(),
        ))
        .expect("open-set shaped by construction");
        let meet = open_intersection(&u, &v).expect("same base space");
        let meet_name = meet.name().clone();
        let dense = dense.clone();
        dovetail_or(None, move |i| apply_name(&meet_name, dense(i).name()))
    });
    Ok(OvertSet::new(base, test))
}

/// `x ↦ cl{x}`: realized exactly like κ and the saturated singleton.
pub fn closure_singleton(x: &Point) -> OvertSet {
    OvertSet::new(
        x.space().clone(),
        crate::admissibility::kappa_name(x.name()),
    )
}

/// Union of overt sets: meets U iff either does.
pub fn v_union(a: &OvertSet, b: &OvertSet) -> KernelResult<OvertSet> {
    expect_base(&b.base(), &a.base())?;
    Ok(OvertSet::new(
        a.base(),
        pointwise_binary(&crate::sets::or_fn_name(), a.name(), b.name()),
    ))
}

/// The empty overt set: meets nothing.
pub fn empty_overt(base: Space) -> OvertSet {
    OvertSet::new(
        base,
        Name::padded(
            crate::t2vm::Builtin::ConstFn.machine_index(),
            Name::zeros(),
        ),
    )
}

fn v_countable_union_index() -> BigUint {
    struct VUnionSeq;
    impl HostRealizer for VUnionSeq {
        fn apply(&self, oracle: &Name, input: &Name) -> Name {
            let seq = oracle.clone();
            let u = input.clone();
            dovetail_or(None, move |n| {
                apply_name(&apply_name(&seq, &Name::nat(n)), &u)
            })
        }
        fn label(&self) -> &'static str {
            "overt-union-seq"
        }
    }
    static INDEX: OnceLock<BigUint> = OnceLock::new();
    INDEX
        .get_or_init(|| MachineIndex::host(register_host(Arc::new(VUnionSeq))).0)
        .clone()
}

/// `⋃ : C(ℕ, V(X)) → V(X)` (closure of the union).
pub fn v_countable_union(as_seq: &Point) -> KernelResult<OvertSet> {
    let SpaceKind::Function(dom, cod) = as_seq.space().kind() else {
        return Err(bad_seq(as_seq));
    };
    let SpaceKind::Overt(base) = cod.kind() else {
        return Err(bad_seq(as_seq));
    };
    if *dom != crate::spaces::nat_space() {
        return Err(bad_seq(as_seq));
    }
    Ok(OvertSet::new(
        base.clone(),
        Name::padded(v_countable_union_index(), as_seq.name().clone()),
    ))
}

fn bad_seq(p: &Point) -> KernelError {
    KernelError::DescriptorMismatch {
        expected: "a sequence of overt sets C(Nat, V(X))".into(),
        found: format!("{:?}", p.space()),
    }
}

fn v_intersect_open_index() -> BigUint {
    struct VIntersect;
    impl HostRealizer for VIntersect {
        fn apply(&self, oracle: &Name, input: &Name) -> Name {
            let (a, v) = unpair(oracle);
            // cl(A ∩ V) meets U iff A meets V ∩ U.
            let meet = pointwise_binary(&crate::sets::and_fn_name(), &v, input);
            apply_name(&a, &meet)
        }
        fn label(&self) -> &'static str {
            "overt-intersect-open"
        }
    }
    static INDEX: OnceLock<BigUint> = OnceLock::new();
    INDEX
        .get_or_init(|| MachineIndex::host(register_host(Arc::new(VIntersect))).0)
        .clone()
}

/// `(A, V) ↦ cl(A ∩ V) : V(X) × O(X) → V(X)`.
pub fn v_intersect_open(a: &OvertSet, v: &OpenSet) -> KernelResult<OvertSet> {
    expect_base(&v.base(), &a.base())?;
    Ok(OvertSet::new(
        a.base(),
        Name::padded(
            v_intersect_open_index(),
            pair(a.name().clone(), v.name().clone()),
        ),
    ))
}

/// Projection `cl π₁(A)` of an overt subset of a product: it meets U iff A
/// meets U × Y.
pub fn v_project(a: &OvertSet) -> KernelResult<OvertSet> {
    let SpaceKind::Product(x_space, y_space) = a.base().kind().clone() else {
        return Err(KernelError::DescriptorMismatch {
            expected: "an overt subset of a product".into(),
            found: format!("{:?}", a.base()),
        });
    };
    let proj = crate::spaces::proj1_fn_point(x_space.clone(), y_space);
    let a_name = a.name().clone();
    let proj_name = proj.name().clone();
    let test = host_fn_name(move |u_name| {
        apply_name(&a_name, &compose_names(u_name, &proj_name))
    });
    Ok(OvertSet::new(x_space, test))
}

fn v_image_index() -> BigUint {
    struct VImage;
    impl HostRealizer for VImage {
        fn apply(&self, oracle: &Name, input: &Name) -> Name {
            let (f, a) = unpair(oracle);
            // cl f[A] meets U iff A meets f⁻¹(U).
            apply_name(&a, &compose_names(input, &f))
        }
        fn label(&self) -> &'static str {
            "overt-image"
        }
    }
    static INDEX: OnceLock<BigUint> = OnceLock::new();
    INDEX
        .get_or_init(|| MachineIndex::host(register_host(Arc::new(VImage))).0)
        .clone()
}

/// `(f, A) ↦ cl f[A] : C(X, Y) × V(X) → V(Y)`.
pub fn v_image(f: &Point, a: &OvertSet) -> KernelResult<OvertSet> {
    let Some((dom, cod)) = f.space().as_function() else {
        return Err(KernelError::DescriptorMismatch {
            expected: "a function-space point".into(),
            found: format!("{:?}", f.space()),
        });
    };
    expect_base(&dom, &a.base())?;
    Ok(OvertSet::new(
        cod,
        Name::padded(v_image_index(), pair(f.name().clone(), a.name().clone())),
    ))
}

/// Preimage under an effectively open map, given by its direct-image
/// action on opens: `cl f⁻¹(A)` meets U iff A meets `f[U]`.
pub fn v_preimage_open(open_image: &Point, a: &OvertSet) -> KernelResult<OvertSet> {
    let Some((dom, cod)) = open_image.space().as_function() else {
        return Err(KernelError::DescriptorMismatch {
            expected: "an open-image map C(O(X), O(Y))".into(),
            found: format!("{:?}", open_image.space()),
        });
    };
    let (SpaceKind::Open(x_space), SpaceKind::Open(y_space)) = (dom.kind(), cod.kind()) else {
        return Err(KernelError::DescriptorMismatch {
            expected: "an open-image map C(O(X), O(Y))".into(),
            found: format!("{:?}", open_image.space()),
        });
    };
    expect_base(&a.base(), y_space)?;
    let img = open_image.name().clone();
    let a_name = a.name().clone();
    let test = host_fn_name(move |u_name| apply_name(&a_name, &apply_name(&img, u_name)));
    Ok(OvertSet::new(x_space.clone(), test))
}

/// `∃(R, A) = {y | ∃x ∈ A (x, y) ∈ R}`.
pub fn exists_rel(r: &OpenSet, a: &OvertSet) -> KernelResult<OpenSet> {
    let SpaceKind::Product(x_space, y_space) = r.base().kind().clone() else {
        return Err(KernelError::DescriptorMismatch {
            expected: "an open relation on a product".into(),
            found: format!("{:?}", r.base()),
        });
    };
    expect_base(&x_space, &a.base())?;
    let a_name = a.name().clone();
    let r_name = r.name().clone();
    let test = host_fn_name(move |y| apply_name(&a_name, &cut_name(y, &r_name)));
    Ok(OpenSet::from_point(Point::new(open_space(y_space), test))
        .expect("constructed as an open set"))
}

/// `⋃ : V(O(Y)) → O(Y)`: union of an overt family of opens.
pub fn v_countable_union_of_opens(a: &OvertSet) -> KernelResult<OpenSet> {
    let SpaceKind::Open(y_space) = a.base().kind().clone() else {
        return Err(KernelError::DescriptorMismatch {
            expected: "an overt family of open sets".into(),
            found: format!("{:?}", a.base()),
        });
    };
    let a_name = a.name().clone();
    let test = host_fn_name(move |y| {
        let y = y.clone();
        let membership_at_y = host_fn_name(move |u_name| apply_name(u_name, &y));
        apply_name(&a_name, &membership_at_y)
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
    use crate::sets::{cylinder_open, empty_open, full_open, member};
    use crate::spaces::{cantor_point, cantor_space, sierp_observe};

    const FUEL: u64 = 1_000_000;

    fn observed(p: &Point, fuel: u64) -> bool {
        sierp_observe(p, fuel).is_confirmed()
    }

    #[test]
    fn whole_cantor_meets_cylinders() {
        let whole = whole_space_overt(&cantor_space()).unwrap();
        let u = cylinder_open(3, true);
        assert!(observed(&intersects(&whole, &u).unwrap(), FUEL));
        assert!(!observed(
            &intersects(&whole, &empty_open(cantor_space())).unwrap(),
            FUEL
        ));
        assert!(observed(
            &intersects(&whole, &full_open(cantor_space())).unwrap(),
            10_000
        ));
    }

    #[test]
    fn closure_singleton_membership() {
        let x = cantor_point(Name::word(vec![true, true]));
        let a = closure_singleton(&x);
        assert!(observed(&intersects(&a, &cylinder_open(1, true)).unwrap(), FUEL));
        assert!(!observed(&intersects(&a, &cylinder_open(2, true)).unwrap(), FUEL));
    }

    #[test]
    fn union_with_empty_is_identity() {
        let x = cantor_point(Name::ones());
        let a = closure_singleton(&x);
        let merged = v_union(&a, &empty_overt(cantor_space())).unwrap();
        let u = cylinder_open(0, true);
        assert_eq!(
            observed(&intersects(&a, &u).unwrap(), FUEL),
            observed(&intersects(&merged, &u).unwrap(), FUEL)
        );
    }

    #[test]
    fn countable_union_of_singletons_is_dense() {
        let seq = crate::sets::seq_point(overt_space(cantor_space()), |i| {
            closure_singleton(&cantor_dense_point(i)).point().clone()
        });
        let dense_set = v_countable_union(&seq).unwrap();
        for (pos, bit) in [(0, true), (2, true), (1, false)] {
            let u = cylinder_open(pos, bit);
            assert!(observed(&intersects(&dense_set, &u).unwrap(), FUEL));
        }
    }

    #[test]
    fn intersect_open_restricts() {
        let whole = whole_space_overt(&cantor_space()).unwrap();
        let restricted = v_intersect_open(&whole, &cylinder_open(0, true)).unwrap();
        assert!(observed(
            &intersects(&restricted, &cylinder_open(1, false)).unwrap(),
            FUEL
        ));
        assert!(!observed(
            &intersects(&restricted, &cylinder_open(0, false)).unwrap(),
            FUEL
        ));
    }

    #[test]
    fn image_under_identity() {
        let x = cantor_point(Name::periodic(vec![false, true]));
        let a = closure_singleton(&x);
        let id = crate::spaces::identity_fn_point(cantor_space());
        let img = v_image(&id, &a).unwrap();
        let u = cylinder_open(1, true);
        assert_eq!(
            observed(&intersects(&a, &u).unwrap(), FUEL),
            observed(&intersects(&img, &u).unwrap(), FUEL)
        );
    }

    #[test]
    fn exists_relation_slices() {
        // R = {(x, y) | x(0) = 1}: ∃x∈cl{1^ω} always holds; over cl{0^ω}
        // never.
        let r = crate::sets::host_open(
            crate::spaces::product_space(cantor_space(), cantor_space()),
            |xy| {
                let (x, _) = crate::names::unpair(xy);
                apply_name(cylinder_open(0, true).name(), &x)
            },
        );
        let ones = closure_singleton(&cantor_point(Name::ones()));
        let zeros = closure_singleton(&cantor_point(Name::zeros()));
        let y = cantor_point(Name::zeros());
        let some = exists_rel(&r, &ones).unwrap();
        let none = exists_rel(&r, &zeros).unwrap();
        assert!(observed(&member(&y, &some).unwrap(), FUEL));
        assert!(!observed(&member(&y, &none).unwrap(), FUEL));
    }

    #[test]
    fn union_over_overt_family_of_opens() {
        let u = cylinder_open(0, true);
        let v = cylinder_open(1, true);
        let family = v_union(
            &closure_singleton(u.point()),
            &closure_singleton(v.point()),
        )
        .unwrap();
        let family = OvertSet::from_point(
            family
                .point()
                .relabel(overt_space(crate::spaces::open_space(cantor_space()))),
        )
        .unwrap();
        let joined = v_countable_union_of_opens(&family).unwrap();
        let in_first = cantor_point(Name::periodic(vec![true, false]));
        let in_neither = cantor_point(Name::zeros());
        assert!(observed(&member(&in_first, &joined).unwrap(), FUEL));
        assert!(!observed(&member(&in_neither, &joined).unwrap(), FUEL));
    }
}
