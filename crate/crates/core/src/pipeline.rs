//! Field -> diagram -> hierarchy, for either sweep direction.

use std::fmt;
use std::str::FromStr;

use crate::field::{total_order, ScalarField};
use crate::filtration::{compute_pairs, PairingTrace, PersistenceDiagram};
use crate::hierarchy::{
    build_isph, build_regular_hierarchy, HierarchyVariant, PersistenceHierarchy,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Sweep {
    #[default]
    Sublevel,
    /// Sublevel sweep of the negated field; reported values are negated back.
    Superlevel,
}

impl FromStr for Sweep {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sublevel" => Ok(Sweep::Sublevel),
            "superlevel" => Ok(Sweep::Superlevel),
            other => Err(format!("unknown mode `{other}`")),
        }
    }
}

impl fmt::Display for Sweep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sweep::Sublevel => "sublevel",
            Sweep::Superlevel => "superlevel",
        })
    }
}

/// Pairs and trace of one field, computed on the swept orientation.
#[derive(Debug, Clone)]
pub struct Analysis {
    sweep: Sweep,
    swept: ScalarField,
    diagram: PersistenceDiagram,
    trace: PairingTrace,
}

impl Analysis {
    pub fn new(field: &ScalarField, sweep: Sweep) -> Self {
        let swept = match sweep {
            Sweep::Sublevel => field.clone(),
            Sweep::Superlevel => field.negate(),
        };
        let order = total_order(&swept);
        let (diagram, trace) = compute_pairs(&swept, &order);
        Analysis {
            sweep,
            swept,
            diagram,
            trace,
        }
    }

    pub fn sweep(&self) -> Sweep {
        self.sweep
    }

    /// The field the sublevel sweep actually ran on.
    pub fn swept_field(&self) -> &ScalarField {
        &self.swept
    }

    pub fn trace(&self) -> &PairingTrace {
        &self.trace
    }

    /// Pairs in the swept orientation.
    pub fn swept_diagram(&self) -> &PersistenceDiagram {
        &self.diagram
    }

    /// Pairs in the values of the input field.
    pub fn diagram(&self) -> PersistenceDiagram {
        match self.sweep {
            Sweep::Sublevel => self.diagram.clone(),
            Sweep::Superlevel => self.diagram.negated(),
        }
    }

    /// Hierarchy in the values of the input field.
    pub fn hierarchy(&self, variant: HierarchyVariant) -> PersistenceHierarchy {
        let h = match variant {
            HierarchyVariant::Regular => build_regular_hierarchy(&self.trace, &self.diagram),
            HierarchyVariant::Isph => build_isph(&self.swept, &self.trace, &self.diagram),
        };
        match self.sweep {
            Sweep::Sublevel => h,
            Sweep::Superlevel => h.negated(),
        }
    }
}
