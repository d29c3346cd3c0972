use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::diagram::Diagram;
use crate::error::DiagramError;
use crate::leg::Leg;

/// Named essential generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Gamma1,
    Gamma2,
    Gamma3,
    H1,
    H2,
    H3,
    H4,
    D1,
    D2,
    G1,
    G2,
    G3,
    G4,
    Y1,
    Y2,
    X1,
    X2,
}

fn yy(spec: [(i64, u8); 6]) -> Diagram {
    Diagram::YY(spec.map(|(k, c)| Leg::g(k, c)))
}

fn h_cyclic(exps: [i64; 4]) -> Diagram {
    let copies = [1, 2, 1, 2];
    Diagram::H(std::array::from_fn(|i| Leg::g(exps[i], copies[i])))
}

fn g_type(exps: [i64; 6]) -> Diagram {
    let copies = [1, 2, 3, 1, 2, 3];
    Diagram::YY(std::array::from_fn(|i| Leg::g(exps[i], copies[i])))
}

impl Generator {
    pub const ALL: [Generator; 17] = [
        Generator::Gamma1,
        Generator::Gamma2,
        Generator::Gamma3,
        Generator::H1,
        Generator::H2,
        Generator::H3,
        Generator::H4,
        Generator::D1,
        Generator::D2,
        Generator::G1,
        Generator::G2,
        Generator::G3,
        Generator::G4,
        Generator::Y1,
        Generator::Y2,
        Generator::X1,
        Generator::X2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Generator::Gamma1 => "Gamma1",
            Generator::Gamma2 => "Gamma2",
            Generator::Gamma3 => "Gamma3",
            Generator::H1 => "H1",
            Generator::H2 => "H2",
            Generator::H3 => "H3",
            Generator::H4 => "H4",
            Generator::D1 => "D1",
            Generator::D2 => "D2",
            Generator::G1 => "G1",
            Generator::G2 => "G2",
            Generator::G3 => "G3",
            Generator::G4 => "G4",
            Generator::Y1 => "Y1",
            Generator::Y2 => "Y2",
            Generator::X1 => "X1",
            Generator::X2 => "X2",
        }
    }

    /// The diagram this name stands for.
    pub fn diagram(self) -> Diagram {
        match self {
            Generator::Gamma1 => yy([(0, 1), (0, 2), (1, 2), (0, 1), (0, 2), (1, 2)]),
            Generator::Gamma2 => yy([(0, 1), (0, 2), (1, 2), (1, 1), (0, 2), (1, 2)]),
            Generator::Gamma3 => yy([(1, 1), (0, 2), (1, 2), (1, 1), (0, 2), (1, 2)]),
            Generator::H1 => h_cyclic([0, 0, 0, 0]),
            Generator::H2 => h_cyclic([0, 0, 0, 1]),
            Generator::H3 => h_cyclic([0, 0, 1, 1]),
            Generator::H4 => h_cyclic([0, 1, 1, 0]),
            Generator::D1 => yy([(0, 1), (0, 2), (1, 2), (0, 1), (0, 3), (1, 3)]),
            Generator::D2 => yy([(0, 1), (0, 2), (1, 2), (1, 1), (0, 3), (1, 3)]),
            Generator::G1 => g_type([0, 0, 0, 0, 0, 0]),
            Generator::G2 => g_type([0, 0, 0, 0, 0, 1]),
            Generator::G3 => g_type([0, 0, 1, 0, 1, 0]),
            Generator::G4 => g_type([0, 0, 1, 1, 1, 0]),
            Generator::Y1 => {
                Diagram::YY([Leg::g(0, 1), Leg::g(0, 2), Leg::e(0, 2), Leg::e(0, 1), Leg::g(0, 3), Leg::e(0, 3)])
            }
            Generator::Y2 => {
                Diagram::YY([Leg::g(0, 1), Leg::g(0, 2), Leg::g(0, 3), Leg::e(0, 1), Leg::e(0, 2), Leg::e(0, 3)])
            }
            Generator::X1 => Diagram::H([Leg::g(0, 1), Leg::g(0, 2), Leg::e(0, 1), Leg::e(0, 2)]),
            Generator::X2 => Diagram::H([Leg::g(0, 1), Leg::e(0, 2), Leg::e(0, 1), Leg::g(0, 2)]),
        }
    }

    /// The generator whose diagram is exactly `d`, if any.
    pub fn from_diagram(d: &Diagram) -> Option<Generator> {
        Generator::ALL.into_iter().find(|g| &g.diagram() == d)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Generator {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let ascii = s.replace('Γ', "Gamma");
        Generator::ALL
            .into_iter()
            .find(|g| g.name() == ascii)
            .ok_or_else(|| DiagramError::UnknownGenerator(s.to_string()))
    }
}

/// A list of generators spanning the target space of a reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialSet {
    pub name: &'static str,
    pub generators: Vec<Generator>,
}

impl EssentialSet {
    /// Two copies of the cyclic module.
    pub fn cyclic2() -> Self {
        use Generator::*;
        EssentialSet { name: "cyclic2", generators: vec![Gamma1, Gamma2, H1, H2, H3, H4] }
    }

    /// Three copies of the cyclic module.
    pub fn cyclic3() -> Self {
        use Generator::*;
        EssentialSet { name: "cyclic3", generators: vec![D1, D2, G1, G2, G3, G4, H1, H2, H3, H4] }
    }

    /// Three copies of the non-cyclic module.
    pub fn noncyclic3() -> Self {
        use Generator::*;
        EssentialSet { name: "noncyclic3", generators: vec![Y1, Y2, X1, X2] }
    }

    pub fn diagrams(&self) -> Vec<Diagram> {
        self.generators.iter().map(|g| g.diagram()).collect()
    }

    /// Every named diagram, in a fixed order.
    pub fn all_diagrams() -> &'static [Diagram] {
        static ALL: OnceLock<Vec<Diagram>> = OnceLock::new();
        ALL.get_or_init(|| Generator::ALL.iter().map(|g| g.diagram()).collect())
    }
}
