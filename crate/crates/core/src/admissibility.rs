//! κ and its left inverses.
//!
//! κ sends a point to its neighbourhood filter: the open subset
//! `{U ∈ O(X) | x ∈ U}` of `O(X)`. A space is admissible when κ has a
//! computable left inverse, i.e. the point can be recovered from its
//! open-set behaviour. Left inverses are carried as capability witnesses:
//! Sierpiński space has an explicit one, function spaces inherit one from
//! their codomain, and the reals get one from the rational interval base.

use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;

use crate::error::{KernelError, KernelResult};
use crate::names::{pair, Name};
use crate::spaces::{
    function_space, host_fn_name, open_space, sierp_space, Point, Space,
    KappaInvWitness,
};
use crate::t2vm::{
    apply_name, function_name, register_host, Builtin, HostRealizer, MachineIndex,
};

/// The realizer shared by κ, saturated singletons and closure singletons:
/// with the point's name as oracle, applying to an open set U answers
/// `U(x)`.
pub fn kappa_name(x: &Name) -> Name {
    struct ApplyTo;
    impl HostRealizer for ApplyTo {
        fn apply(&self, oracle: &Name, input: &Name) -> Name {
            apply_name(input, oracle)
        }
        fn label(&self) -> &'static str {
            "apply-to-point"
        }
    }
    static INDEX: OnceLock<BigUint> = OnceLock::new();
    let idx = INDEX
        .get_or_init(|| MachineIndex::host(register_host(Arc::new(ApplyTo))).0)
        .clone();
    Name::padded(idx, x.clone())
}

/// The space `O(O(X))` housing κ-images, as a function space.
pub fn kappa_image_space(x: &Space) -> Space {
    function_space(open_space(x.clone()), sierp_space())
}

/// `κ(x) = {U ∈ O(X) | x ∈ U}`.
pub fn kappa(x: &Point) -> Point {
    Point::new(kappa_image_space(x.space()), kappa_name(x.name()))
}

/// The open subset `{⊤}` of Sierpiński space: the identity map `S → S`
/// read as an open set.
pub fn sierp_top_open_name() -> Name {
    function_name(
        &MachineIndex::of_program(&crate::spaces::identity_program()),
        Name::zeros(),
    )
}

/// `κ_S⁻¹(F) = F({⊤})`.
pub fn kappa_inv_sierp(f: &Point) -> Point {
    kappa_inv_sierp_point(f)
}

pub fn kappa_inv_sierp_point(f: &Point) -> Point {
    crate::spaces::sierp_point(apply_name(f.name(), &sierp_top_open_name()))
}

/// Build the κ left inverse of `C(dom, cod)` from the one of `cod`: from
/// the neighbourhood filter of `f`, the filter of `f(x)` is computable for
/// every `x`, and admissibility of the codomain finishes the job.
pub fn function_space_kappa_inv(dom: Space, cod: Space) -> Arc<KappaInvWitness> {
    Arc::new(move |big_f: &Point| {
        let kinv_cod = cod
            .caps()
            .admissible
            .clone()
            .expect("codomain admissibility is checked at registration");
        let big_f_name = big_f.name().clone();
        let cod2 = cod.clone();
        let recovered = move |x_name: &Name| {
            let x_name = x_name.clone();
            let big_f_name = big_f_name.clone();
            // κ_cod(f(x)): U ↦ F({g | g(x) ∈ U}).
            let filter = host_fn_name(move |u_name| {
                let x_name = x_name.clone();
                let u_name = u_name.clone();
                let graph_slice =
                    host_fn_name(move |g_name| apply_name(&u_name, &apply_name(g_name, &x_name)));
                apply_name(&big_f_name, &graph_slice)
            });
            kinv_cod(&Point::new(kappa_image_space(&cod2), filter)).into_name()
        };
        crate::spaces::host_fn_point(dom.clone(), cod.clone(), recovered)
    })
}

/// Apply a space's registered κ left inverse.
pub fn kappa_inv(space: &Space, filter: &Point) -> KernelResult<Point> {
    let witness = space
        .caps()
        .admissible
        .clone()
        .ok_or_else(|| KernelError::MissingCapability {
            space: format!("{space:?}"),
            capability: "admissible",
        })?;
    Ok(witness(filter))
}

/// Reflection along κ: for admissible codomains, a map `f : X → Y` factors
/// as `R(f) ∘ κ`, with `R(f)` acting on neighbourhood filters.
pub fn reflect(f: &Point) -> KernelResult<Point> {
    let Some((dom, cod)) = f.space().as_function() else {
        return Err(KernelError::DescriptorMismatch {
            expected: "a function-space point".into(),
            found: format!("{:?}", f.space()),
        });
    };
    let kinv_cod = cod
        .caps()
        .admissible
        .clone()
        .ok_or_else(|| KernelError::MissingCapability {
            space: format!("{cod:?}"),
            capability: "admissible",
        })?;
    let f_name = f.name().clone();
    let cod2 = cod.clone();
    let body = move |kx_name: &Name| {
        let f_name = f_name.clone();
        let kx_name = kx_name.clone();
        // κ(x) composed with preimages of f gives κ_cod(f(x)).
        let filter = host_fn_name(move |u_name| {
            let pre = Name::padded(
                Builtin::Compose.machine_index(),
                pair(u_name.clone(), f_name.clone()),
            );
            apply_name(&kx_name, &pre)
        });
        kinv_cod(&Point::new(kappa_image_space(&cod2), filter)).into_name()
    };
    Ok(crate::spaces::host_fn_point(
        kappa_image_space(&dom),
        cod,
        body,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{
        cantor_point, cantor_space, const_fn, eval, nat_point, nat_space, sierp_bottom,
        sierp_observe, sierp_top, Point,
    };

    const FUEL: u64 = 1_000_000;

    #[test]
    fn kappa_membership_agreement() {
        // κ(x)(U) behaves as x ∈ U on cylinders.
        let x = cantor_point(Name::word(vec![false, false, true]));
        let kx = kappa(&x);
        let u = crate::sets::cylinder_open(2, true);
        let inside = eval(&kx, u.point()).unwrap();
        assert!(sierp_observe(&inside, FUEL).is_confirmed());
        let v = crate::sets::cylinder_open(0, true);
        let outside = eval(&kx, v.point()).unwrap();
        assert!(!sierp_observe(&outside, FUEL).is_confirmed());
    }

    #[test]
    fn sierp_round_trip() {
        let top = kappa_inv_sierp(&kappa(&sierp_top()));
        assert!(sierp_observe(&top, FUEL).is_confirmed());
        let bottom = kappa_inv_sierp(&kappa(&sierp_bottom()));
        assert!(!sierp_observe(&bottom, 100_000).is_confirmed());
    }

    #[test]
    fn function_space_round_trip() {
        // const ⊤ in C(ℕ, S), recovered from its κ image.
        let f = const_fn(nat_space(), &sierp_top());
        let back = kappa_inv(f.space(), &kappa(&f)).unwrap();
        let at3 = eval(&back, &nat_point(3)).unwrap();
        assert!(sierp_observe(&at3, FUEL).is_confirmed());

        let g = const_fn(nat_space(), &sierp_bottom());
        let back = kappa_inv(g.space(), &kappa(&g)).unwrap();
        let at0 = eval(&back, &nat_point(0)).unwrap();
        assert!(!sierp_observe(&at0, 200_000).is_confirmed());
    }

    #[test]
    fn reflect_factors_through_kappa() {
        let u = crate::sets::cylinder_open(1, true);
        let f: Point = u.point().clone().relabel(function_space(
            cantor_space(),
            crate::spaces::sierp_space(),
        ));
        let reflected = reflect(&f).unwrap();
        for name in [
            Name::word(vec![false, true, false]),
            Name::word(vec![true, false]),
        ] {
            let x = cantor_point(name);
            let via = eval(&reflected, &kappa(&x)).unwrap();
            let direct = eval(&f, &x).unwrap();
            assert_eq!(
                sierp_observe(&via, FUEL).is_confirmed(),
                sierp_observe(&direct, FUEL).is_confirmed()
            );
        }
    }
}
