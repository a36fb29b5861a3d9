//! Ext^1 towers: level quotients joined by ι-induced maps.
//!
//! The weak tower has level groups
//! `Q_L = ℤ^{m(L)} / (I - A)_{L,L+1} ℤ^{m(L+1)}` and the strong tower
//! `S_L = ℤ^{m(L)} / (I - A)_{L,L+1} ℤ_0^{m(L+1)}`; in both cases
//! `I_{L,L+1}` induces a connecting map from the level-(L+1) group to the
//! level-L group, well defined by the commutation relation
//! `I_{L,L+1} (I - A)_{L+1,L+2} = (I - A)_{L,L+1} I_{L+1,L+2}` (for the
//! strong tower also because ι preserves coordinate sums). The inductive
//! limits of these towers are the weak and strong `Ext^1` groups; a
//! truncation reports the finite tower plus a stabilization verdict: the
//! tower counts as stabilized when the last `window` level groups agree
//! and the connecting maps between them are isomorphisms.

use alloc::vec::Vec;

use num_traits::One;

use crate::intlinalg::{induced_map_on_presentations, FGAbelianGroup, InducedMap, QuotientPresentation};
use crate::lgs::{LgsError, TruncatedLambdaGraphSystem};

use super::{
    ensure_validated, strong_level_presentation, weak_level_presentation, weak_relations, ExtError,
};

/// Stabilization verdict of a tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stabilization {
    /// From `level` to the top of the tower the groups agree and the
    /// connecting maps are isomorphisms, over a run of at least `window`
    /// levels.
    StabilizedAt { level: usize },
    /// No suffix of length `window` is constant.
    NotStabilized,
}

/// A tower of level quotients with the ι-induced connecting maps.
#[derive(Clone, Debug)]
pub struct GroupTower {
    /// `(level, presentation)` pairs, shallowest first.
    pub levels: Vec<(usize, QuotientPresentation)>,
    /// `connecting_maps[k]` maps the `levels[k+1]` group to the
    /// `levels[k]` group.
    pub connecting_maps: Vec<InducedMap>,
    /// The window length used for the stabilization verdict.
    pub window: usize,
    /// Whether and where the tower stabilizes.
    pub stabilization: Stabilization,
}

impl GroupTower {
    /// The presentation at a level, if the tower contains it.
    pub fn presentation_at(&self, level: usize) -> Option<&QuotientPresentation> {
        self.levels
            .iter()
            .find(|(l, _)| *l == level)
            .map(|(_, p)| p)
    }

    /// The group at a level, if the tower contains it.
    pub fn group_at(&self, level: usize) -> Option<&FGAbelianGroup> {
        self.presentation_at(level).map(|p| &p.group)
    }

    /// The limit group when the tower stabilized.
    pub fn stabilized_group(&self) -> Option<&FGAbelianGroup> {
        match self.stabilization {
            Stabilization::StabilizedAt { .. } => self.levels.last().map(|(_, p)| &p.group),
            Stabilization::NotStabilized => None,
        }
    }

    /// True when the tower stabilized.
    pub fn is_stabilized(&self) -> bool {
        matches!(self.stabilization, Stabilization::StabilizedAt { .. })
    }
}

/// The tower converging to `Ext_w^1(𝔏) = ℤ_I / (I - A_𝔏) ℤ_I`.
pub fn weak_ext1_tower(
    lgs: &TruncatedLambdaGraphSystem,
    window: usize,
) -> Result<GroupTower, ExtError> {
    ext1_tower(lgs, window, false)
}

/// The tower converging to `Ext_s^1(𝔏) = ℤ_I / (I - A_𝔏) ℤ_{I,0}`.
///
/// Besides the quotients themselves this verifies, per level, that the
/// strong relation lattice sits inside the weak one (so the natural
/// surjection `S_L ↠ Q_L` exists) and that every ι column sums to 1 (what
/// makes the sum-zero condition level independent).
pub fn strong_ext1_tower(
    lgs: &TruncatedLambdaGraphSystem,
    window: usize,
) -> Result<GroupTower, ExtError> {
    ext1_tower(lgs, window, true)
}

fn ext1_tower(
    lgs: &TruncatedLambdaGraphSystem,
    window: usize,
    strong: bool,
) -> Result<GroupTower, ExtError> {
    ensure_validated(lgs)?;
    if window == 0 {
        return Err(ExtError::WindowTooSmall { window });
    }
    let depth = lgs.depth();
    if depth < window.saturating_add(1) {
        return Err(LgsError::InsufficientDepth {
            needed: window.saturating_add(1),
            found: depth,
        }
        .into());
    }
    let base = lgs.base_level();
    let top = lgs.top_level();

    let mut levels = Vec::with_capacity(top - base);
    for l in base..top {
        let pres = if strong {
            let iota = lgs.iota_matrix(l)?;
            for j in 0..iota.cols() {
                if !iota.column_sum(j).is_one() {
                    return Err(ExtError::InternalConsistency(
                        "an iota column does not sum to 1",
                    ));
                }
            }
            let pres = strong_level_presentation(lgs, l)?;
            if !pres.relations.is_sublattice_of(&weak_relations(lgs, l)?) {
                return Err(ExtError::InternalConsistency(
                    "strong relations do not embed into weak relations",
                ));
            }
            pres
        } else {
            weak_level_presentation(lgs, l)?
        };
        levels.push((l, pres));
    }

    let mut connecting_maps = Vec::with_capacity(levels.len() - 1);
    for k in 0..levels.len() - 1 {
        let raw = lgs.iota_matrix(base + k)?;
        let map = induced_map_on_presentations(&levels[k + 1].1, &levels[k].1, raw)
            .map_err(|_| ExtError::InternalConsistency("ι does not induce a connecting map"))?;
        connecting_maps.push(map);
    }

    // Maximal suffix over which the groups are constant and the
    // connecting maps are isomorphisms.
    let n = levels.len();
    let mut start = n - 1;
    while start > 0
        && levels[start - 1].1.group == levels[n - 1].1.group
        && connecting_maps[start - 1].is_isomorphism
    {
        start -= 1;
    }
    let stabilization = if n - start >= window {
        Stabilization::StabilizedAt {
            level: levels[start].0,
        }
    } else {
        Stabilization::NotStabilized
    };

    Ok(GroupTower {
        levels,
        connecting_maps,
        window,
        stabilization,
    })
}
