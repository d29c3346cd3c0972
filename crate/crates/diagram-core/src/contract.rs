use crate::conventions::{Conventions, PushSide};
use crate::diagram::Diagram;

/// Joins legs `i` and `j` of a YY or H diagram by an edge labelled `t^m`,
/// oriented from `i` to `j`.
///
/// The remaining legs keep their labels except for the push of `t^m` across
/// the new edge. Returns the sign and the resulting diagram, or `None` for
/// diagrams that are not YY or H, or for `i == j`.
pub fn contract(d: &Diagram, i: usize, j: usize, m: i64, conv: &Conventions) -> Option<(i64, Diagram)> {
    if i == j {
        return None;
    }
    match d {
        Diagram::YY(l) => {
            let (ti, tj) = (i / 3, j / 3);
            if ti == 1 && tj == 0 {
                let swapped = Diagram::YY([l[3], l[4], l[5], l[0], l[1], l[2]]);
                return contract(&swapped, i - 3, j + 3, m, conv);
            }
            if ti == 0 && tj == 1 {
                let a = |s: usize| l[(i + s) % 3];
                let b = |s: usize| l[3 + (j - 3 + s) % 3];
                let legs = match conv.push_side {
                    PushSide::First => [a(1).shifted(-m), a(2).shifted(-m), b(1), b(2)],
                    PushSide::Second => [a(1), a(2), b(1).shifted(-m), b(2).shifted(-m)],
                };
                return Some((1, Diagram::H(legs)));
            }
            let base = 3 * ti;
            let (li, lj) = (i - base, j - base);
            let stem = l[base + 3 - li - lj];
            let tripod = if ti == 0 { [l[3], l[4], l[5]] } else { [l[0], l[1], l[2]] };
            let mm = if lj == (li + 1) % 3 { m } else { -m };
            Some((1, Diagram::Lollipop { stem, m: mm, tripod }))
        }
        Diagram::H(x) => {
            let (li, lj) = (i < 2, j < 2);
            match (li, lj) {
                (false, true) => contract(d, j, i, -m, conv),
                (true, false) => {
                    let (sign, a, b) = match (i, j) {
                        (1, 3) => (-1, x[0], x[2]),
                        (0, 2) => (-1, x[1], x[3]),
                        (0, 3) => (1, x[1], x[2]),
                        (1, 2) => (1, x[0], x[3]),
                        _ => return None,
                    };
                    Some((sign, Diagram::Theta { legs: [a, b], m }))
                }
                _ => {
                    let mm = if i < j { m } else { -m };
                    let legs = if li { [x[2], x[3]] } else { [x[0], x[1]] };
                    Some((1, Diagram::Tadpole { legs, m: mm }))
                }
            }
        }
        _ => None,
    }
}

/// Short tag naming the kind of a lower-order token.
pub fn lower_kind(d: &Diagram) -> Option<&'static str> {
    match d {
        Diagram::Theta { .. } => Some("theta"),
        Diagram::Tadpole { .. } => Some("tadpole"),
        Diagram::Lollipop { .. } => Some("lollipop"),
        Diagram::ZeroLeg(_) => Some("zero-leg"),
        Diagram::YY(_) | Diagram::H(_) => None,
    }
}
