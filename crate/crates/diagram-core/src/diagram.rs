use std::fmt;

use itertools::Itertools;

use crate::leg::Leg;

/// Shapes that carry general (non-monomial) labels before expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ShapeKind {
    YY,
    H,
}

impl ShapeKind {
    pub fn n_legs(self) -> usize {
        match self {
            ShapeKind::YY => 6,
            ShapeKind::H => 4,
        }
    }
}

/// A degree-two diagram with monomial leg labels and implicit linkings.
///
/// `YY` and `H` are the generators proper. The remaining variants are
/// opaque lower-order tokens produced by contractions in full mode:
///
/// * `Theta`: two trivalent vertices joined by two edges labelled `1` and
///   `t^m`, both oriented from the vertex carrying `legs[0]` to the vertex
///   carrying `legs[1]`.
/// * `Tadpole`: a vertex with a loop labelled `t^m` joined to a vertex
///   carrying the two legs.
/// * `Lollipop`: a loop labelled `t^m` with one leg `stem`, next to a tripod.
/// * `ZeroLeg`: a closed diagram identified by its tag.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diagram {
    YY([Leg; 6]),
    H([Leg; 4]),
    Theta { legs: [Leg; 2], m: i64 },
    Tadpole { legs: [Leg; 2], m: i64 },
    Lollipop { stem: Leg, m: i64, tripod: [Leg; 3] },
    ZeroLeg(String),
}

impl Diagram {
    pub fn legs(&self) -> Vec<Leg> {
        match self {
            Diagram::YY(l) => l.to_vec(),
            Diagram::H(l) => l.to_vec(),
            Diagram::Theta { legs, .. } | Diagram::Tadpole { legs, .. } => legs.to_vec(),
            Diagram::Lollipop { stem, tripod, .. } => std::iter::once(*stem).chain(tripod.iter().copied()).collect(),
            Diagram::ZeroLeg(_) => Vec::new(),
        }
    }

    pub fn n_legs(&self) -> usize {
        match self {
            Diagram::YY(_) => 6,
            Diagram::H(_) | Diagram::Lollipop { .. } => 4,
            Diagram::Theta { .. } | Diagram::Tadpole { .. } => 2,
            Diagram::ZeroLeg(_) => 0,
        }
    }

    /// True for the opaque tokens, which only survive in full mode.
    pub fn is_lower_order(&self) -> bool {
        !matches!(self, Diagram::YY(_) | Diagram::H(_))
    }

    pub fn kind(&self) -> Option<ShapeKind> {
        match self {
            Diagram::YY(_) => Some(ShapeKind::YY),
            Diagram::H(_) => Some(ShapeKind::H),
            _ => None,
        }
    }

    /// Builds a YY or H diagram from a leg list of the right length.
    pub fn from_kind(kind: ShapeKind, legs: &[Leg]) -> Diagram {
        match kind {
            ShapeKind::YY => Diagram::YY(legs.try_into().expect("six legs")),
            ShapeKind::H => Diagram::H(legs.try_into().expect("four legs")),
        }
    }

    /// Applies `f` to every leg.
    pub fn map_legs<F: Fn(Leg) -> Leg>(&self, f: F) -> Diagram {
        match self {
            Diagram::YY(l) => Diagram::YY(l.map(&f)),
            Diagram::H(l) => Diagram::H(l.map(&f)),
            Diagram::Theta { legs, m } => Diagram::Theta { legs: legs.map(&f), m: *m },
            Diagram::Tadpole { legs, m } => Diagram::Tadpole { legs: legs.map(&f), m: *m },
            Diagram::Lollipop { stem, m, tripod } => {
                Diagram::Lollipop { stem: f(*stem), m: *m, tripod: tripod.map(&f) }
            }
            Diagram::ZeroLeg(t) => Diagram::ZeroLeg(t.clone()),
        }
    }

    /// Copies appearing in leg labels, sorted and without repetition.
    pub fn copies(&self) -> Vec<u8> {
        self.legs().iter().map(|l| l.copy).sorted().dedup().collect()
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |ls: &[Leg]| ls.iter().map(|l| l.to_string()).join(",");
        match self {
            Diagram::YY(l) => write!(f, "YY[{};{}]", j(&l[..3]), j(&l[3..])),
            Diagram::H(l) => write!(f, "H[{}|{}]", j(&l[..2]), j(&l[2..])),
            Diagram::Theta { legs, m } => write!(f, "Theta[{};{m}]", j(legs)),
            Diagram::Tadpole { legs, m } => write!(f, "Tadpole[{};{m}]", j(legs)),
            Diagram::Lollipop { stem, m, tripod } => {
                write!(f, "Lollipop[{stem};{m}|{}]", j(tripod))
            }
            Diagram::ZeroLeg(tag) => write!(f, "Zero[{tag}]"),
        }
    }
}
