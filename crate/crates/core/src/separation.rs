//! Separation: inequality, equality, and the conversions they buy.
//!
//! A T₂ space semidecides inequality; that turns compact sets into closed
//! sets and functions into closed graphs. A discrete space semidecides
//! equality; that turns overt sets into open sets. Both live as capability
//! witnesses on the space descriptor and are only as honest as their
//! registration — property tests are the safety net.

use crate::compact::{closed_to_compact, CompactSet};
use crate::error::{KernelError, KernelResult};
use crate::names::{pair, unpair, Name};
use crate::overt::OvertSet;
use crate::sets::{compose_names, ClosedSet, OpenSet};
use crate::spaces::{
    closed_space, host_fn_name, open_space, Point, Space, SpaceKind,
};
use crate::t2vm::apply_name;

fn t2_witness(space: &Space) -> KernelResult<std::sync::Arc<crate::spaces::NeqWitness>> {
    space
        .caps()
        .t2
        .clone()
        .ok_or_else(|| KernelError::MissingCapability {
            space: format!("{space:?}"),
            capability: "t2",
        })
}

fn discrete_witness(space: &Space) -> KernelResult<std::sync::Arc<crate::spaces::EqWitness>> {
    space
        .caps()
        .discrete
        .clone()
        .ok_or_else(|| KernelError::MissingCapability {
            space: format!("{space:?}"),
            capability: "discrete",
        })
}

fn expect_same(x: &Point, y: &Point) -> KernelResult<()> {
    if x.space() == y.space() {
        Ok(())
    } else {
        Err(KernelError::DescriptorMismatch {
            expected: format!("{:?}", x.space()),
            found: format!("{:?}", y.space()),
        })
    }
}

/// `≠ : X × X → S`. Confirms only on semantically distinct points.
pub fn neq(x: &Point, y: &Point) -> KernelResult<Point> {
    expect_same(x, y)?;
    let witness = t2_witness(x.space())?;
    Ok(witness(x, y))
}

/// `= : X × X → S` on discrete spaces.
pub fn eq(x: &Point, y: &Point) -> KernelResult<Point> {
    expect_same(x, y)?;
    let witness = discrete_witness(x.space())?;
    Ok(witness(x, y))
}

/// `{x}` as a closed set: exclusion is inequality.
pub fn closed_singleton(x: &Point) -> KernelResult<ClosedSet> {
    let witness = t2_witness(x.space())?;
    let base = x.space().clone();
    let x = x.clone();
    let test = host_fn_name(move |y_name| {
        let y = Point::new(x.space().clone(), y_name.clone());
        witness(&x, &y).into_name()
    });
    ClosedSet::from_point(Point::new(closed_space(base), test))
}

/// `{y | y ≠ x}` as an open set.
pub fn neq_open(x: &Point) -> KernelResult<OpenSet> {
    Ok(crate::sets::complement_closed(&closed_singleton(x)?))
}

/// `id : K(X) → A(X)` on T₂ spaces: a point is excluded from K exactly
/// when K is contained in its inequality neighbourhood.
pub fn k_to_closed(k: &CompactSet) -> KernelResult<ClosedSet> {
    let base = k.base();
    t2_witness(&base)?;
    let k_name = k.name().clone();
    let base_inner = base.clone();
    let test = host_fn_name(move |x_name| {
        let x = Point::new(base_inner.clone(), x_name.clone());
        let hole = neq_open(&x).expect("t2 witness checked at construction");
        apply_name(&k_name, hole.name())
    });
    ClosedSet::from_point(Point::new(closed_space(base), test))
}

/// `id : V(X) → O(X)` on discrete spaces: membership is meeting the
/// equality neighbourhood.
pub fn v_to_open(a: &OvertSet) -> KernelResult<OpenSet> {
    let base = a.base();
    let eq_witness = discrete_witness(&base)?;
    let a_name = a.name().clone();
    let base_inner = base.clone();
    let test = host_fn_name(move |x_name| {
        let x = Point::new(base_inner.clone(), x_name.clone());
        let eq_witness = eq_witness.clone();
        let x_for_eq = x.clone();
        let eq_ball = host_fn_name(move |y_name| {
            let y = Point::new(x_for_eq.space().clone(), y_name.clone());
            eq_witness(&x_for_eq, &y).into_name()
        });
        apply_name(&a_name, &eq_ball)
    });
    OpenSet::from_point(Point::new(open_space(base), test))
}

/// `Graph : C(Y, X) → A(Y × X)` for T₂ codomains: a pair is off the graph
/// when the value differs from the second coordinate.
pub fn graph(f: &Point) -> KernelResult<ClosedSet> {
    let Some((dom, cod)) = f.space().as_function() else {
        return Err(KernelError::DescriptorMismatch {
            expected: "a function-space point".into(),
            found: format!("{:?}", f.space()),
        });
    };
    let witness = t2_witness(&cod)?;
    let base = crate::spaces::product_space(dom, cod.clone());
    let f_name = f.name().clone();
    let test = host_fn_name(move |yx_name| {
        let (y_name, x_name) = unpair(yx_name);
        let value = Point::new(cod.clone(), apply_name(&f_name, &y_name));
        let x = Point::new(cod.clone(), x_name);
        witness(&value, &x).into_name()
    });
    ClosedSet::from_point(Point::new(closed_space(base), test))
}

/// Recover `f(x)` from a closed graph, for compact admissible codomains:
/// the slice of the graph at `x` is the closed singleton `{f(x)}`,
/// compactness turns it into a compact set, and admissibility reads the
/// point back off its neighbourhood filter.
pub fn graph_inv(g: &ClosedSet, x: &Point) -> KernelResult<Point> {
    let SpaceKind::Product(x_space, y_space) = g.base().kind().clone() else {
        return Err(KernelError::DescriptorMismatch {
            expected: "a closed subset of a product".into(),
            found: format!("{:?}", g.base()),
        });
    };
    if *x.space() != x_space {
        return Err(KernelError::DescriptorMismatch {
            expected: format!("{x_space:?}"),
            found: format!("{:?}", x.space()),
        });
    }
    let g_name = g.name().clone();
    let x_name = x.name().clone();
    let slice = ClosedSet::from_point(Point::new(
        closed_space(y_space.clone()),
        host_fn_name(move |y_name| apply_name(&g_name, &pair(x_name.clone(), y_name.clone()))),
    ))?;
    let compact_slice = closed_to_compact(&slice)?;
    let filter = Point::new(
        crate::admissibility::kappa_image_space(&y_space),
        compact_slice.name().clone(),
    );
    crate::admissibility::kappa_inv(&y_space, &filter)
}

/// Proper preimage `(f, K) ↦ f⁻¹(K)` for T₂ codomains and compact
/// domains: compose the closed view of K with f, then use the domain's
/// compactness.
pub fn proper_preimage(f: &Point, k: &CompactSet) -> KernelResult<CompactSet> {
    let Some((dom, cod)) = f.space().as_function() else {
        return Err(KernelError::DescriptorMismatch {
            expected: "a function-space point".into(),
            found: format!("{:?}", f.space()),
        });
    };
    if cod != k.base() {
        return Err(KernelError::DescriptorMismatch {
            expected: format!("{:?}", k.base()),
            found: format!("{cod:?}"),
        });
    }
    let as_closed = k_to_closed(k)?;
    let pre = ClosedSet::from_point(Point::new(
        closed_space(dom),
        compose_names(as_closed.name(), f.name()),
    ))?;
    closed_to_compact(&pre)
}
