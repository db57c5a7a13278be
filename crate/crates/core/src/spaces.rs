//! Represented spaces and their points.
//!
//! A [`Space`] is a structural descriptor giving names their semantics,
//! optionally carrying capability witnesses (compactness, overtness, T₂,
//! discreteness, admissibility) as host realizers. A [`Point`] pairs a
//! descriptor with a name. The only equality available on points is
//! observational: prefix agreement at caller-chosen depth and fuel.
//!
//! The combinator suite (eval, curry, uncurry, composition, products,
//! constants, partial application) works on function-space points whose
//! names have the executable shape `0^n 1 p`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{KernelError, KernelResult};
use crate::fuel::{FuelMeter, Interrupt, Observation};
use crate::names::{cantor_unpair, pair, unpair, Name};
use crate::search::{dovetail_all, dovetail_or, search_name, SearchProcess, StepOutcome};
use crate::t2vm::{apply_name, assemble, function_name, Builtin, MachineIndex, Program};

/// Structural kind of a represented space.
#[derive(Clone)]
pub enum SpaceKind {
    Nat,
    Sierp,
    Cantor,
    Product(Space, Space),
    Coproduct(Space, Space),
    Wedge(Space, Space),
    Function(Space, Space),
    Open(Space),
    Closed(Space),
    Compact(Space),
    Overt(Space),
    Real,
    RealLower,
    RealUpper,
    Subspace(Space, String),
}

/// Witness semideciding emptiness of a closed subset; the compactness
/// capability. Takes a `Closed(X)` point, returns a Sierpiński point.
pub type IsEmptyWitness = dyn Fn(&Point) -> Point + Send + Sync;
/// Dense sequence supplier; the overtness capability.
pub type DenseSeq = dyn Fn(u64) -> Point + Send + Sync;
/// Inequality realizer; the T₂ capability.
pub type NeqWitness = dyn Fn(&Point, &Point) -> Point + Send + Sync;
/// Equality realizer; the discreteness capability.
pub type EqWitness = dyn Fn(&Point, &Point) -> Point + Send + Sync;
/// Left inverse of κ; the admissibility capability. Takes a point of
/// `O(O(X))` in the image of κ, returns the underlying point of `X`.
pub type KappaInvWitness = dyn Fn(&Point) -> Point + Send + Sync;

#[derive(Clone, Default)]
pub struct Capabilities {
    pub compact: Option<Arc<IsEmptyWitness>>,
    pub overt: Option<Arc<DenseSeq>>,
    pub t2: Option<Arc<NeqWitness>>,
    pub discrete: Option<Arc<EqWitness>>,
    pub admissible: Option<Arc<KappaInvWitness>>,
}

struct SpaceInner {
    kind: SpaceKind,
    caps: Capabilities,
}

/// A represented space: structural kind plus capability witnesses.
#[derive(Clone)]
pub struct Space(Arc<SpaceInner>);

impl Space {
    pub fn new(kind: SpaceKind) -> Space {
        Space(Arc::new(SpaceInner {
            kind,
            caps: Capabilities::default(),
        }))
    }

    pub fn with_caps(kind: SpaceKind, caps: Capabilities) -> Space {
        Space(Arc::new(SpaceInner { kind, caps }))
    }

    pub fn kind(&self) -> &SpaceKind {
        &self.0.kind
    }

    pub fn caps(&self) -> &Capabilities {
        &self.0.caps
    }

    fn map_caps(&self, f: impl FnOnce(&mut Capabilities)) -> Space {
        let mut caps = self.0.caps.clone();
        f(&mut caps);
        Space(Arc::new(SpaceInner {
            kind: self.0.kind.clone(),
            caps,
        }))
    }

    pub fn with_compact(&self, w: Arc<IsEmptyWitness>) -> Space {
        self.map_caps(|c| c.compact = Some(w))
    }

    pub fn with_overt(&self, w: Arc<DenseSeq>) -> Space {
        self.map_caps(|c| c.overt = Some(w))
    }

    pub fn with_t2(&self, w: Arc<NeqWitness>) -> Space {
        self.map_caps(|c| c.t2 = Some(w))
    }

    pub fn with_discrete(&self, w: Arc<EqWitness>) -> Space {
        self.map_caps(|c| c.discrete = Some(w))
    }

    pub fn with_admissible(&self, w: Arc<KappaInvWitness>) -> Space {
        self.map_caps(|c| c.admissible = Some(w))
    }

    /// View function-like descriptors as `(domain, codomain)`. Open and
    /// closed sets are functions into Sierpiński space; compact and overt
    /// sets are functions on the open-set space.
    pub fn as_function(&self) -> Option<(Space, Space)> {
        match self.kind() {
            SpaceKind::Function(d, c) => Some((d.clone(), c.clone())),
            SpaceKind::Open(x) | SpaceKind::Closed(x) => Some((x.clone(), sierp_space())),
            SpaceKind::Compact(x) | SpaceKind::Overt(x) => {
                Some((open_space(x.clone()), sierp_space()))
            }
            _ => None,
        }
    }
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        match (self.kind(), other.kind()) {
            (SpaceKind::Nat, SpaceKind::Nat)
            | (SpaceKind::Sierp, SpaceKind::Sierp)
            | (SpaceKind::Cantor, SpaceKind::Cantor)
            | (SpaceKind::Real, SpaceKind::Real)
            | (SpaceKind::RealLower, SpaceKind::RealLower)
            | (SpaceKind::RealUpper, SpaceKind::RealUpper) => true,
            (SpaceKind::Product(a, b), SpaceKind::Product(c, d))
            | (SpaceKind::Coproduct(a, b), SpaceKind::Coproduct(c, d))
            | (SpaceKind::Wedge(a, b), SpaceKind::Wedge(c, d))
            | (SpaceKind::Function(a, b), SpaceKind::Function(c, d)) => a == c && b == d,
            (SpaceKind::Open(a), SpaceKind::Open(b))
            | (SpaceKind::Closed(a), SpaceKind::Closed(b))
            | (SpaceKind::Compact(a), SpaceKind::Compact(b))
            | (SpaceKind::Overt(a), SpaceKind::Overt(b)) => a == b,
            (SpaceKind::Subspace(a, s), SpaceKind::Subspace(b, t)) => s == t && a == b,
            _ => false,
        }
    }
}

impl Eq for Space {}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            SpaceKind::Nat => write!(f, "Nat"),
            SpaceKind::Sierp => write!(f, "Sierp"),
            SpaceKind::Cantor => write!(f, "Cantor"),
            SpaceKind::Product(a, b) => write!(f, "({a:?} x {b:?})"),
            SpaceKind::Coproduct(a, b) => write!(f, "({a:?} + {b:?})"),
            SpaceKind::Wedge(a, b) => write!(f, "({a:?} ^ {b:?})"),
            SpaceKind::Function(a, b) => write!(f, "C({a:?}, {b:?})"),
            SpaceKind::Open(x) => write!(f, "O({x:?})"),
            SpaceKind::Closed(x) => write!(f, "A({x:?})"),
            SpaceKind::Compact(x) => write!(f, "K({x:?})"),
            SpaceKind::Overt(x) => write!(f, "V({x:?})"),
            SpaceKind::Real => write!(f, "Real"),
            SpaceKind::RealLower => write!(f, "RealLower"),
            SpaceKind::RealUpper => write!(f, "RealUpper"),
            SpaceKind::Subspace(x, tag) => write!(f, "{x:?}[{tag}]"),
        }
    }
}

/// A point: a space descriptor paired with a name.
#[derive(Clone, Debug)]
pub struct Point {
    space: Space,
    name: Name,
}

impl Point {
    pub fn new(space: Space, name: Name) -> Point {
        Point { space, name }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn name(&self) -> &Name {
        &self.name
    }

    pub fn into_name(self) -> Name {
        self.name
    }

    /// Same name under a different descriptor. The structural move behind
    /// complement and the other "realized by the identity" maps.
    pub fn relabel(&self, space: Space) -> Point {
        Point {
            space,
            name: self.name.clone(),
        }
    }

    fn expect_space(&self, expected: &Space, what: &str) -> KernelResult<()> {
        if self.space == *expected {
            Ok(())
        } else {
            Err(KernelError::DescriptorMismatch {
                expected: format!("{expected:?} ({what})"),
                found: format!("{:?}", self.space),
            })
        }
    }
}

// ---------------------------------------------------------------------------
// Canonical spaces
// ---------------------------------------------------------------------------

/// ℕ with `δ(0^n 1 0^ω) = n`. Discrete, T₂ and overt.
pub fn nat_space() -> Space {
    static SPACE: OnceLock<Space> = OnceLock::new();
    SPACE
        .get_or_init(|| {
            let caps = Capabilities {
                discrete: Some(Arc::new(|x: &Point, y: &Point| {
                    sierp_point(nat_compare_name(x.name().clone(), y.name().clone(), true))
                })),
                t2: Some(Arc::new(|x: &Point, y: &Point| {
                    sierp_point(nat_compare_name(x.name().clone(), y.name().clone(), false))
                })),
                overt: Some(Arc::new(|i| nat_point(i))),
                ..Capabilities::default()
            };
            Space::with_caps(SpaceKind::Nat, caps)
        })
        .clone()
}

/// Sierpiński space: ⊥ named by `0^ω`, ⊤ by anything else. Compact, overt
/// and admissible.
pub fn sierp_space() -> Space {
    static SPACE: OnceLock<Space> = OnceLock::new();
    SPACE
        .get_or_init(|| {
            let caps = Capabilities {
                compact: Some(Arc::new(sierp_is_empty)),
                overt: Some(Arc::new(|i| {
                    if i % 2 == 0 {
                        sierp_top()
                    } else {
                        sierp_bottom()
                    }
                })),
                admissible: Some(Arc::new(crate::admissibility::kappa_inv_sierp_point)),
                ..Capabilities::default()
            };
            Space::with_caps(SpaceKind::Sierp, caps)
        })
        .clone()
}

/// Cantor space: names are their own points. Compact (exhaustively
/// searchable), overt and T₂.
pub fn cantor_space() -> Space {
    static SPACE: OnceLock<Space> = OnceLock::new();
    SPACE
        .get_or_init(|| {
            let caps = Capabilities {
                compact: Some(Arc::new(|a: &Point| {
                    crate::compact::cantor_closed_is_empty(a)
                })),
                overt: Some(Arc::new(crate::overt::cantor_dense_point)),
                t2: Some(Arc::new(|x: &Point, y: &Point| {
                    sierp_point(first_difference_name(
                        x.name().clone(),
                        y.name().clone(),
                    ))
                })),
                ..Capabilities::default()
            };
            Space::with_caps(SpaceKind::Cantor, caps)
        })
        .clone()
}

/// The space of opens of `x`, structurally `C(x, S)`.
pub fn open_space(x: Space) -> Space {
    derive_function_caps(SpaceKind::Open(x))
}

/// The space of closeds of `x`, structurally `C(x, S)` with flipped polarity.
pub fn closed_space(x: Space) -> Space {
    derive_function_caps(SpaceKind::Closed(x))
}

/// The function space `C(dom, cod)`.
pub fn function_space(dom: Space, cod: Space) -> Space {
    derive_function_caps(SpaceKind::Function(dom, cod))
}

/// The space of saturated compact subsets of `x`, a subspace of `O(O(x))`.
pub fn compact_space(x: Space) -> Space {
    derive_function_caps(SpaceKind::Compact(x))
}

/// The space of overt subsets of `x`, a subspace of `O(O(x))`.
pub fn overt_space(x: Space) -> Space {
    derive_function_caps(SpaceKind::Overt(x))
}

/// Attach the admissibility witness every function space into an admissible
/// codomain carries.
fn derive_function_caps(kind: SpaceKind) -> Space {
    let space = Space::new(kind);
    let (dom, cod) = space.as_function().expect("function-like kind");
    if cod.caps().admissible.is_some() {
        let witness = crate::admissibility::function_space_kappa_inv(dom, cod);
        space.with_admissible(witness)
    } else {
        space
    }
}

/// Product space with capabilities derived from both factors.
pub fn product_space(x: Space, y: Space) -> Space {
    let mut caps = Capabilities::default();
    if let (Some(nx), Some(ny)) = (x.caps().t2.clone(), y.caps().t2.clone()) {
        caps.t2 = Some(Arc::new(move |a: &Point, b: &Point| {
            let (a1, a2) = split_product(a);
            let (b1, b2) = split_product(b);
            let left = nx(&a1, &b1);
            let right = ny(&a2, &b2);
            let names = [left.into_name(), right.into_name()];
            sierp_point(dovetail_or(Some(2), move |i| names[i as usize].clone()))
        }));
    }
    if let (Some(ex), Some(ey)) = (x.caps().discrete.clone(), y.caps().discrete.clone()) {
        caps.discrete = Some(Arc::new(move |a: &Point, b: &Point| {
            let (a1, a2) = split_product(a);
            let (b1, b2) = split_product(b);
            let left = ex(&a1, &b1);
            let right = ey(&a2, &b2);
            sierp_point(dovetail_all(vec![left.into_name(), right.into_name()]))
        }));
    }
    if let (Some(dx), Some(dy)) = (x.caps().overt.clone(), y.caps().overt.clone()) {
        let (px, py) = (x.clone(), y.clone());
        caps.overt = Some(Arc::new(move |i| {
            let (a, b) = cantor_unpair(i);
            make_product_in(px.clone(), py.clone(), &dx(a), &dy(b))
        }));
    }
    if let (Some(kx), Some(ky)) = (x.caps().compact.clone(), y.caps().compact.clone()) {
        let (px, py) = (x.clone(), y.clone());
        caps.compact = Some(Arc::new(move |a: &Point| {
            // The slice of A at y is a closed subset of X; A is empty iff
            // every slice is, and "the set of y with non-empty slice" is
            // itself closed because X is compact.
            let a_name = a.name().clone();
            let kx = kx.clone();
            let px2 = px.clone();
            let slice_empty = host_sierp_fn(py.clone(), move |y_name| {
                let a_name = a_name.clone();
                let y_name = y_name.clone();
                let slice = Point::new(
                    closed_space(px2.clone()),
                    crate::t2vm::apply_name(
                        &Name::padded(slice_membership_index(), a_name),
                        &y_name,
                    ),
                );
                // slice_membership packs (x, y) itself; see below.
                kx(&slice).into_name()
            });
            ky(&slice_empty.relabel(closed_space(py.clone())))
        }));
    }
    Space::with_caps(SpaceKind::Product(x, y), caps)
}

/// Host realizer that turns a closed set of a product into its slice at a
/// fixed second coordinate: oracle = name of A plus the fixed y, input = x.
fn slice_membership_index() -> BigUint {
    use crate::t2vm::{register_host, HostRealizer};
    struct Slice;
    impl HostRealizer for Slice {
        fn apply(&self, oracle: &Name, input: &Name) -> Name {
            // oracle = A's name; input here is y; the returned *function*
            // name fixes y and waits for x.
            let a = oracle.clone();
            let y = input.clone();
            Name::padded(
                Builtin::Partial.machine_index(),
                pair(
                    swap_then_apply_name(a),
                    y,
                ),
            )
        }
        fn label(&self) -> &'static str {
            "product-slice"
        }
    }
    static SLOT: OnceLock<BigUint> = OnceLock::new();
    SLOT.get_or_init(|| {
        let slot = register_host(Arc::new(Slice));
        MachineIndex::host(slot).0
    })
    .clone()
}

/// `A ∘ swap` as a function name, so that partial application can fix the
/// second product coordinate.
fn swap_then_apply_name(a: Name) -> Name {
    Name::padded(
        Builtin::Compose.machine_index(),
        pair(a, swap_fn_name()),
    )
}

/// Coproduct space (no derived capabilities).
pub fn coproduct_space(x: Space, y: Space) -> Space {
    Space::new(SpaceKind::Coproduct(x, y))
}

/// Wedge space: both name components denote the same point.
pub fn wedge_space(x: Space, y: Space) -> Space {
    Space::new(SpaceKind::Wedge(x, y))
}

// ---------------------------------------------------------------------------
// ℕ and S points
// ---------------------------------------------------------------------------

/// `n` as a point of ℕ.
pub fn nat_point(n: u64) -> Point {
    Point::new(nat_space(), Name::nat(n))
}

/// Decode a δ_ℕ name by locating its separating 1.
pub fn nat_decode(x: &Point, fuel: u64) -> KernelResult<u64> {
    let mut meter = FuelMeter::new(fuel);
    nat_decode_metered(x, &mut meter)
}

pub fn nat_decode_metered(x: &Point, meter: &mut FuelMeter) -> KernelResult<u64> {
    let block = x.name().read_block(0, meter)?;
    block
        .to_u64()
        .ok_or(KernelError::Overflow("natural beyond host word"))
}

/// Three-valued observation of a Sierpiński point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SierpObservation {
    Confirmed,
    Unknown,
}

impl SierpObservation {
    pub fn is_confirmed(self) -> bool {
        matches!(self, SierpObservation::Confirmed)
    }
}

pub fn sierp_point(name: Name) -> Point {
    Point::new(sierp_space(), name)
}

/// The canonical name of ⊤.
pub fn sierp_top() -> Point {
    sierp_point(Name::word(vec![true]))
}

/// The canonical name of ⊥.
pub fn sierp_bottom() -> Point {
    sierp_point(Name::zeros())
}

/// Scan a Sierpiński name for a 1 within the budget. `Unknown` absorbs both
/// fuel exhaustion and prefix exhaustion; it is never a proof of ⊥.
pub fn sierp_observe(p: &Point, fuel: u64) -> SierpObservation {
    sierp_observe_name(p.name(), fuel)
}

pub fn sierp_observe_name(name: &Name, fuel: u64) -> SierpObservation {
    let mut meter = FuelMeter::new(fuel);
    sierp_observe_metered(name, &mut meter)
}

pub fn sierp_observe_metered(name: &Name, meter: &mut FuelMeter) -> SierpObservation {
    let mut idx = 0u64;
    loop {
        match name.bit_metered(idx, meter) {
            Ok(true) => return SierpObservation::Confirmed,
            Ok(false) => idx += 1,
            Err(_) => return SierpObservation::Unknown,
        }
    }
}

/// Emptiness witness for S: a closed subset of S is empty iff its
/// membership test confirms on both canonical points.
fn sierp_is_empty(a: &Point) -> Point {
    let not_bottom = apply_name(a.name(), sierp_bottom().name());
    let not_top = apply_name(a.name(), sierp_top().name());
    sierp_point(dovetail_all(vec![not_bottom, not_top]))
}

/// Search comparing two δ_ℕ names once both decode; confirms equality or
/// inequality according to `want_equal`. Scans one bit per internal step so
/// it stays fair under dovetail slices.
fn nat_compare_name(x: Name, y: Name, want_equal: bool) -> Name {
    struct Scan {
        name: Name,
        pos: u64,
        found: Option<BigUint>,
    }
    impl Scan {
        fn advance(&mut self, meter: &mut FuelMeter) -> Observation<()> {
            if self.found.is_some() {
                return Ok(());
            }
            if let Some((block, _)) = self.name.split_block(meter)? {
                self.found = Some(block);
                return Ok(());
            }
            if self.name.bit_metered(self.pos, meter)? {
                self.found = Some(BigUint::from(self.pos));
            } else {
                self.pos += 1;
            }
            Ok(())
        }
    }
    struct Compare {
        x: Scan,
        y: Scan,
        want_equal: bool,
    }
    impl SearchProcess for Compare {
        fn step(&mut self, meter: &mut FuelMeter) -> Observation<StepOutcome> {
            if self.x.found.is_none() {
                self.x.advance(meter)?;
                return Ok(StepOutcome::Progress);
            }
            if self.y.found.is_none() {
                self.y.advance(meter)?;
                return Ok(StepOutcome::Progress);
            }
            if (self.x.found == self.y.found) == self.want_equal {
                Ok(StepOutcome::Confirmed)
            } else {
                Ok(StepOutcome::Dead)
            }
        }
    }
    search_name(Compare {
        x: Scan {
            name: x,
            pos: 0,
            found: None,
        },
        y: Scan {
            name: y,
            pos: 0,
            found: None,
        },
        want_equal,
    })
}

/// Search confirming that two names differ at some position.
fn first_difference_name(x: Name, y: Name) -> Name {
    struct Diff {
        x: Name,
        y: Name,
        pos: u64,
    }
    impl SearchProcess for Diff {
        fn step(&mut self, meter: &mut FuelMeter) -> Observation<StepOutcome> {
            let a = self.x.bit_metered(self.pos, meter)?;
            let b = self.y.bit_metered(self.pos, meter)?;
            self.pos += 1;
            if a != b {
                Ok(StepOutcome::Confirmed)
            } else {
                Ok(StepOutcome::Progress)
            }
        }
    }
    search_name(Diff { x, y, pos: 0 })
}

/// A raw name as a point of Cantor space.
pub fn cantor_point(name: Name) -> Point {
    Point::new(cantor_space(), name)
}

// ---------------------------------------------------------------------------
// Products, coproducts, wedges
// ---------------------------------------------------------------------------

fn make_product_in(xs: Space, ys: Space, x: &Point, y: &Point) -> Point {
    Point::new(
        product_space(xs, ys),
        pair(x.name().clone(), y.name().clone()),
    )
}

pub fn make_product(x: &Point, y: &Point) -> Point {
    make_product_in(x.space().clone(), y.space().clone(), x, y)
}

/// Structural projections of a product point.
pub fn split_product(p: &Point) -> (Point, Point) {
    let (xs, ys) = match p.space().kind() {
        SpaceKind::Product(a, b) => (a.clone(), b.clone()),
        // Projections of unlabelled pair names fall back to Cantor.
        _ => (cantor_space(), cantor_space()),
    };
    let (px, py) = unpair(p.name());
    (Point::new(xs, px), Point::new(ys, py))
}

pub fn proj1(p: &Point) -> Point {
    split_product(p).0
}

pub fn proj2(p: &Point) -> Point {
    split_product(p).1
}

/// Left injection: selector bit 0 then the payload.
pub fn inject1(x: &Point, right: Space) -> Point {
    Point::new(
        coproduct_space(x.space().clone(), right),
        Name::prefixed(vec![false], x.name().clone()),
    )
}

/// Right injection: selector bit 1 then the payload.
pub fn inject2(left: Space, y: &Point) -> Point {
    Point::new(
        coproduct_space(left, y.space().clone()),
        Name::prefixed(vec![true], y.name().clone()),
    )
}

pub enum CoproductSide {
    Left(Point),
    Right(Point),
}

/// Case analysis: reads exactly the selector bit.
pub fn case_split(p: &Point, fuel: u64) -> KernelResult<CoproductSide> {
    let (lx, ly) = match p.space().kind() {
        SpaceKind::Coproduct(a, b) => (a.clone(), b.clone()),
        _ => {
            return Err(KernelError::DescriptorMismatch {
                expected: "a coproduct".into(),
                found: format!("{:?}", p.space()),
            })
        }
    };
    let selector = p.name().bit(0, fuel)?;
    let payload = p.name().suffix(1);
    Ok(if selector {
        CoproductSide::Right(Point::new(ly, payload))
    } else {
        CoproductSide::Left(Point::new(lx, payload))
    })
}

/// Wedge of two names denoting the same point (caller obligation).
pub fn make_wedge(x: &Point, y: &Point) -> Point {
    Point::new(
        wedge_space(x.space().clone(), y.space().clone()),
        pair(x.name().clone(), y.name().clone()),
    )
}

// ---------------------------------------------------------------------------
// Function-space points and the combinator suite
// ---------------------------------------------------------------------------

/// The function point `0^n 1 oracle : dom -> cod`. That the machine
/// actually realizes a function of this type is the caller's obligation.
pub fn make_function(index: &MachineIndex, oracle: Name, dom: Space, cod: Space) -> Point {
    Point::new(function_space(dom, cod), function_name(index, oracle))
}

pub fn make_function_from_program(
    program: &Program,
    oracle: Name,
    dom: Space,
    cod: Space,
) -> Point {
    make_function(&MachineIndex::of_program(program), oracle, dom, cod)
}

/// Register a host closure as a function point `dom -> cod`.
pub fn host_fn_point(
    dom: Space,
    cod: Space,
    f: impl Fn(&Name) -> Name + Send + Sync + 'static,
) -> Point {
    Point::new(function_space(dom.clone(), cod), host_fn_name(f))
}

/// Host closure producing a Sierpiński value; convenient for set layers.
pub fn host_sierp_fn(dom: Space, f: impl Fn(&Name) -> Name + Send + Sync + 'static) -> Point {
    host_fn_point(dom, sierp_space(), f)
}

/// The bare function name of a host closure.
pub fn host_fn_name(f: impl Fn(&Name) -> Name + Send + Sync + 'static) -> Name {
    use crate::t2vm::{register_host, HostRealizer};
    struct Closure<F>(F);
    impl<F: Fn(&Name) -> Name + Send + Sync> HostRealizer for Closure<F> {
        fn apply(&self, _oracle: &Name, input: &Name) -> Name {
            (self.0)(input)
        }
    }
    let slot = register_host(Arc::new(Closure(f)));
    function_name(&MachineIndex::host(slot), Name::zeros())
}

/// Universal application at the point level.
pub fn eval(f: &Point, x: &Point) -> KernelResult<Point> {
    let Some((dom, cod)) = f.space().as_function() else {
        return Err(KernelError::DescriptorMismatch {
            expected: "a function-space point".into(),
            found: format!("{:?}", f.space()),
        });
    };
    x.expect_space(&dom, "function argument")?;
    Ok(Point::new(cod, apply_name(f.name(), x.name())))
}

/// Application without the descriptor check, for internal plumbing where
/// the caller already holds the typing invariant.
pub fn eval_unchecked(f: &Point, x: &Point) -> Point {
    let cod = f
        .space()
        .as_function()
        .map(|(_, c)| c)
        .unwrap_or_else(sierp_space);
    Point::new(cod, apply_name(f.name(), x.name()))
}

/// `curry(f) = x ↦ (y ↦ f(x, y))`.
pub fn curry(f: &Point) -> KernelResult<Point> {
    let (dom, cod) = fn_signature(f)?;
    let SpaceKind::Product(x, y) = dom.kind().clone() else {
        return Err(KernelError::DescriptorMismatch {
            expected: "a function on a product".into(),
            found: format!("{dom:?}"),
        });
    };
    Ok(Point::new(
        function_space(x, function_space(y, cod)),
        Name::padded(Builtin::CurryStep.machine_index(), f.name().clone()),
    ))
}

/// `uncurry(g) = (x, y) ↦ g(x)(y)`.
pub fn uncurry(g: &Point) -> KernelResult<Point> {
    let (x, inner) = fn_signature(g)?;
    let Some((y, z)) = inner.as_function() else {
        return Err(KernelError::DescriptorMismatch {
            expected: "a function into a function space".into(),
            found: format!("{inner:?}"),
        });
    };
    Ok(Point::new(
        function_space(product_space(x, y), z),
        Name::padded(Builtin::Uncurry.machine_index(), g.name().clone()),
    ))
}

/// `compose(f, g) = f ∘ g`.
pub fn compose(f: &Point, g: &Point) -> KernelResult<Point> {
    let (fy, fz) = fn_signature(f)?;
    let (gx, gy) = fn_signature(g)?;
    if fy != gy {
        return Err(KernelError::DescriptorMismatch {
            expected: format!("{fy:?} (domain of the outer function)"),
            found: format!("{gy:?}"),
        });
    }
    Ok(Point::new(
        function_space(gx, fz),
        Name::padded(
            Builtin::Compose.machine_index(),
            pair(f.name().clone(), g.name().clone()),
        ),
    ))
}

/// `product_map(f, g) = (x, u) ↦ (f(x), g(u))`.
pub fn product_map(f: &Point, g: &Point) -> KernelResult<Point> {
    let (fx, fy) = fn_signature(f)?;
    let (gu, gz) = fn_signature(g)?;
    Ok(Point::new(
        function_space(product_space(fx, gu), product_space(fy, gz)),
        Name::padded(
            Builtin::Product.machine_index(),
            pair(f.name().clone(), g.name().clone()),
        ),
    ))
}

/// `const_fn(y) = (x ↦ y)`.
pub fn const_fn(dom: Space, y: &Point) -> Point {
    Point::new(
        function_space(dom, y.space().clone()),
        Name::padded(Builtin::ConstFn.machine_index(), y.name().clone()),
    )
}

/// `partial(x, f) = (y ↦ f(x, y))`.
pub fn partial_apply(x: &Point, f: &Point) -> KernelResult<Point> {
    let (dom, cod) = fn_signature(f)?;
    let SpaceKind::Product(fx, fy) = dom.kind().clone() else {
        return Err(KernelError::DescriptorMismatch {
            expected: "a function on a product".into(),
            found: format!("{dom:?}"),
        });
    };
    x.expect_space(&fx, "fixed first coordinate")?;
    Ok(Point::new(
        function_space(fy, cod),
        Name::padded(
            Builtin::Partial.machine_index(),
            pair(f.name().clone(), x.name().clone()),
        ),
    ))
}

fn fn_signature(f: &Point) -> KernelResult<(Space, Space)> {
    f.space()
        .as_function()
        .ok_or_else(|| KernelError::DescriptorMismatch {
            expected: "a function-space point".into(),
            found: format!("{:?}", f.space()),
        })
}

/// The evaluation map itself as a point of `C(C(X, Y) × X, Y)`.
pub fn eval_fn_point(x: Space, y: Space) -> Point {
    Point::new(
        function_space(
            product_space(function_space(x.clone(), y.clone()), x),
            y,
        ),
        function_name(&MachineIndex::builtin(Builtin::Eval), Name::zeros()),
    )
}

/// The diagonal `x ↦ (x, x)`.
pub fn diagonal_fn_point(x: Space) -> Point {
    Point::new(
        function_space(x.clone(), product_space(x.clone(), x)),
        function_name(&MachineIndex::builtin(Builtin::Diagonal), Name::zeros()),
    )
}

fn static_program(src: &str, cell: &'static OnceLock<Arc<Program>>) -> Arc<Program> {
    cell.get_or_init(|| Arc::new(assemble(src).expect("static program assembles")))
        .clone()
}

/// The identity machine, copying its input to its output.
pub fn identity_program() -> Arc<Program> {
    static CELL: OnceLock<Arc<Program>> = OnceLock::new();
    static_program(
        "const r2 1\nloop: readinput r0 r1\nwrite r0\nadd r1 r2\njmp loop\n",
        &CELL,
    )
}

/// Machine emitting the even positions of its input (first pair component).
pub fn proj1_program() -> Arc<Program> {
    static CELL: OnceLock<Arc<Program>> = OnceLock::new();
    static_program(
        "const r2 2\nloop: readinput r0 r1\nwrite r0\nadd r1 r2\njmp loop\n",
        &CELL,
    )
}

/// Machine emitting the odd positions of its input (second pair component).
pub fn proj2_program() -> Arc<Program> {
    static CELL: OnceLock<Arc<Program>> = OnceLock::new();
    static_program(
        "const r2 2\nconst r1 1\nloop: readinput r0 r1\nwrite r0\nadd r1 r2\njmp loop\n",
        &CELL,
    )
}

/// Machine swapping the two components of a pair name.
pub fn swap_program() -> Arc<Program> {
    static CELL: OnceLock<Arc<Program>> = OnceLock::new();
    static_program(
        "const r2 2\nconst r1 1\nconst r4 0\nloop: readinput r0 r1\nwrite r0\nreadinput r0 r4\nwrite r0\nadd r1 r2\nadd r4 r2\njmp loop\n",
        &CELL,
    )
}

pub fn identity_fn_point(x: Space) -> Point {
    make_function_from_program(&identity_program(), Name::zeros(), x.clone(), x)
}

pub fn proj1_fn_point(x: Space, y: Space) -> Point {
    make_function_from_program(
        &proj1_program(),
        Name::zeros(),
        product_space(x.clone(), y),
        x,
    )
}

pub fn proj2_fn_point(x: Space, y: Space) -> Point {
    make_function_from_program(
        &proj2_program(),
        Name::zeros(),
        product_space(x, y.clone()),
        y,
    )
}

pub fn swap_fn_point(x: Space, y: Space) -> Point {
    make_function_from_program(
        &swap_program(),
        Name::zeros(),
        product_space(x.clone(), y.clone()),
        product_space(y, x),
    )
}

fn swap_fn_name() -> Name {
    function_name(
        &MachineIndex::of_program(&swap_program()),
        Name::zeros(),
    )
}

// ---------------------------------------------------------------------------
// Observational equality and name discipline
// ---------------------------------------------------------------------------

/// Prefix equality at depth `bits` under a shared budget. Fails with an
/// interrupt if either side cannot materialize the prefix.
pub fn obs_eq(a: &Name, b: &Name, bits: u64, fuel: u64) -> Observation<bool> {
    let mut meter = FuelMeter::new(fuel);
    for i in 0..bits {
        if a.bit_metered(i, &mut meter)? != b.bit_metered(i, &mut meter)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn point_obs_eq(a: &Point, b: &Point, bits: u64, fuel: u64) -> Observation<bool> {
    obs_eq(a.name(), b.name(), bits, fuel)
}

/// Parse a function name `0^n 1 p` into its machine index and oracle.
/// Structural names answer immediately; anything else is scanned.
pub fn parse_function_name(name: &Name, fuel: u64) -> Observation<(BigUint, Name)> {
    let mut meter = FuelMeter::new(fuel);
    if let Some((n, tail)) = name.split_block(&mut meter)? {
        return Ok((n, tail));
    }
    let mut pos = 0u64;
    loop {
        if name.bit_metered(pos, &mut meter)? {
            return Ok((BigUint::from(pos), name.suffix(pos + 1)));
        }
        pos = pos.checked_add(1).ok_or(Interrupt::FuelExhausted)?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FUEL: u64 = 200_000;

    #[test]
    fn nat_round_trip() {
        for n in [0u64, 1, 5, 17] {
            assert_eq!(nat_decode(&nat_point(n), FUEL).unwrap(), n);
        }
    }

    #[test]
    fn nat_decode_reads_to_the_first_one() {
        let p = Point::new(nat_space(), Name::periodic(vec![false, true]));
        assert_eq!(nat_decode(&p, 10).unwrap(), 1);
    }

    #[test]
    fn sierp_observation_matches_delta_s() {
        assert_eq!(sierp_observe(&sierp_bottom(), 1_000), SierpObservation::Unknown);
        let late = sierp_point(Name::word(vec![false, false, false, true]));
        assert_eq!(sierp_observe(&late, 100), SierpObservation::Confirmed);
        assert_eq!(sierp_observe(&late, 2), SierpObservation::Unknown);
    }

    #[test]
    fn product_projections() {
        let p = make_product(&nat_point(2), &nat_point(3));
        assert_eq!(nat_decode(&proj2(&p), FUEL).unwrap(), 3);
        assert_eq!(nat_decode(&proj1(&p), FUEL).unwrap(), 2);
    }

    #[test]
    fn injection_prefixes_selector() {
        let p = inject1(&nat_point(4), nat_space());
        let expected = Name::prefixed(vec![false], Name::nat(4));
        assert_eq!(p.name().prefix(8, FUEL), expected.prefix(8, FUEL));
        match case_split(&p, FUEL).unwrap() {
            CoproductSide::Left(x) => assert_eq!(nat_decode(&x, FUEL).unwrap(), 4),
            CoproductSide::Right(_) => panic!("expected the left side"),
        }
    }

    #[test]
    fn eval_identity_and_const() {
        let x = cantor_point(Name::periodic(vec![true, false, false]));
        let id = identity_fn_point(cantor_space());
        let out = eval(&id, &x).unwrap();
        assert!(point_obs_eq(&out, &x, 16, FUEL).unwrap());

        let c = const_fn(cantor_space(), &nat_point(7));
        let out = eval(&c, &x).unwrap();
        assert_eq!(nat_decode(&out, FUEL).unwrap(), 7);
    }

    #[test]
    fn eval_rejects_descriptor_mismatch() {
        let id = identity_fn_point(cantor_space());
        assert!(eval(&id, &nat_point(1)).is_err());
    }

    #[test]
    fn curry_uncurry_round_trip_observably() {
        // f(x, y) = y on Cantor × Cantor, via the second projection.
        let f = proj2_fn_point(cantor_space(), cantor_space());
        let x = cantor_point(Name::zeros());
        let y = cantor_point(Name::periodic(vec![true, false]));
        let curried = curry(&f).unwrap();
        let fy = eval(&curried, &x).unwrap();
        let out = eval(&fy, &y).unwrap();
        assert!(point_obs_eq(&out, &y, 16, FUEL).unwrap());

        let back = uncurry(&curried).unwrap();
        let direct = eval(&f, &make_product(&x, &y)).unwrap();
        let via = eval(&back, &make_product(&x, &y)).unwrap();
        assert!(point_obs_eq(&direct, &via, 16, FUEL).unwrap());
    }

    #[test]
    fn compose_const_absorbs() {
        let c = const_fn(cantor_space(), &nat_point(3));
        let id = identity_fn_point(cantor_space());
        let piped = compose(&c, &id).unwrap();
        let out = eval(&piped, &cantor_point(Name::ones())).unwrap();
        assert_eq!(nat_decode(&out, FUEL).unwrap(), 3);
    }

    #[test]
    fn swap_swaps() {
        let x = cantor_point(Name::zeros());
        let y = cantor_point(Name::ones());
        let sw = swap_fn_point(cantor_space(), cantor_space());
        let out = eval(&sw, &make_product(&x, &y)).unwrap();
        let (a, b) = split_product(&out);
        assert!(point_obs_eq(&a, &y, 8, FUEL).unwrap());
        assert!(point_obs_eq(&b, &x, 8, FUEL).unwrap());
    }

    #[test]
    fn function_name_discipline() {
        let f = const_fn(cantor_space(), &nat_point(2));
        let (idx, oracle) = parse_function_name(f.name(), FUEL).unwrap();
        assert_eq!(idx, Builtin::ConstFn.machine_index());
        assert!(obs_eq(&oracle, &Name::nat(2), 8, FUEL).unwrap());
        // Rebuilding from the parse yields the same stream.
        let rebuilt = Name::padded(idx, oracle);
        assert!(obs_eq(&rebuilt, f.name(), 24, FUEL).unwrap());
    }

    #[test]
    fn nat_is_discrete_and_t2() {
        let eq = nat_space().caps().discrete.clone().unwrap();
        let ne = nat_space().caps().t2.clone().unwrap();
        assert!(sierp_observe(&eq(&nat_point(4), &nat_point(4)), FUEL).is_confirmed());
        assert!(!sierp_observe(&eq(&nat_point(4), &nat_point(5)), FUEL).is_confirmed());
        assert!(sierp_observe(&ne(&nat_point(2), &nat_point(3)), FUEL).is_confirmed());
        assert!(!sierp_observe(&ne(&nat_point(2), &nat_point(2)), FUEL).is_confirmed());
    }
}
