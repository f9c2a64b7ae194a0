//! Named fixture diagrams shipped with the library.

use crate::error::Result;
use crate::gauss::{strip_comments, GaussDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    /// File contents: `#` comment lines, then the code.
    pub text: &'static str,
}

impl Fixture {
    pub fn code(&self) -> String {
        strip_comments(self.text)
    }

    pub fn comment(&self) -> String {
        self.text
            .lines()
            .filter_map(|l| l.trim().strip_prefix('#'))
            .map(str::trim)
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn diagram(&self) -> Result<GaussDiagram> {
        GaussDiagram::parse(&self.code())
    }
}

macro_rules! fixtures {
    ($($name:literal),* $(,)?) => {
        pub const FIXTURES: &[Fixture] = &[
            $(Fixture { name: $name, text: include_str!(concat!("../fixtures/", $name, ".gauss")) },)*
        ];
    };
}

fixtures!(
    "kishino",
    "kishino-variant",
    "slavik",
    "eg1-link",
    "virtual-trefoil",
    "hopf",
    "trefoil",
    "figure-eight",
    "whitehead",
);

pub fn get(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

/// Parses a fixture that is known to be valid.
pub fn diagram(name: &str) -> GaussDiagram {
    get(name)
        .unwrap_or_else(|| panic!("no fixture named {name}"))
        .diagram()
        .expect("fixtures parse")
}
