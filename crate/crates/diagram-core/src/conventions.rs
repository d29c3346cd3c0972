/// Which side of a contracted edge absorbs its label.
///
/// Contracting a leg `A_i` of the first tripod with a leg `B_j` of the
/// second along an edge labelled `t^m` (oriented from `A` to `B`) yields an
/// H-diagram. `First` multiplies the two remaining `A` legs by `t^-m`,
/// which is equivalent to multiplying the `B` legs by `t^m`. `Second`
/// multiplies the `B` legs by `t^-m` instead; it is kept only as a
/// negative control.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PushSide {
    #[default]
    First,
    Second,
}

/// Whether lower-order diagrams are kept.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Work modulo diagrams with at most two legs: they are dropped.
    #[default]
    Quotient,
    /// Keep two-leg and zero-leg diagrams as opaque tokens.
    Full,
}

/// Sign and side conventions shared by every rewriting step.
///
/// The default is the only consistent choice; the other settings exist so
/// that the verification suite can check that it detects a wrong
/// convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Conventions {
    /// Sign picked up by one transposition at a trivalent vertex.
    pub as_sign: i64,
    pub push_side: PushSide,
    /// Whether linking corrections are emitted when labels change.
    pub ld_corrections: bool,
}

impl Default for Conventions {
    fn default() -> Self {
        Conventions { as_sign: -1, push_side: PushSide::First, ld_corrections: true }
    }
}

impl Conventions {
    pub fn flipped_as() -> Self {
        Conventions { as_sign: 1, ..Default::default() }
    }

    pub fn wrong_push_side() -> Self {
        Conventions { push_side: PushSide::Second, ..Default::default() }
    }

    pub fn without_ld() -> Self {
        Conventions { ld_corrections: false, ..Default::default() }
    }

    /// Sign of a vertex permutation with the given parity.
    pub fn perm_sign(&self, odd: bool) -> i64 {
        if odd {
            self.as_sign
        } else {
            1
        }
    }
}
