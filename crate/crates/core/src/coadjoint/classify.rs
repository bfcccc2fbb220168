//! Classification of simple types by existence of an open coadjoint orbit
//! of the Borel subalgebra.

use super::{isotropy, standard_point, ActionKind};
use crate::cascade::compute_cascade;
use crate::chevalley::LieAlgebra;
use crate::rootsys::{RootSystem, SimpleType};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRow {
    pub simple_type: SimpleType,
    pub ell: usize,
    pub m: usize,
    /// `w0 = -1`, read off the longest element.
    pub minus_one_in_weyl: bool,
    /// The `b` coadjoint orbit through `Σ e_{-β}` has codimension zero.
    pub open_coadjoint_orbit: bool,
}

impl ClassificationRow {
    /// The three independent criteria agree.
    pub fn consistent(&self) -> bool {
        (self.m == self.ell) == self.minus_one_in_weyl
            && self.minus_one_in_weyl == self.open_coadjoint_orbit
    }
}

pub fn classify_type(t: SimpleType) -> Result<ClassificationRow> {
    let rs = RootSystem::new(t);
    let cs = compute_cascade(&rs).to_set();
    let g = LieAlgebra::build(&rs)?;
    let tau = standard_point(&cs).to_point(&g, &cs)?;
    let iso = isotropy(&g, ActionKind::CoadB, &tau)?;
    Ok(ClassificationRow {
        simple_type: t,
        ell: rs.rank(),
        m: cs.m(),
        minus_one_in_weyl: rs.longest_element().is_minus_identity(),
        open_coadjoint_orbit: iso.codim == 0,
    })
}

/// Rows for every simple type of rank at most `max_rank`, ordered by
/// (family, rank). `C2` is omitted in favour of `B2`.
pub fn classify(max_rank: usize) -> Result<Vec<ClassificationRow>> {
    if max_rank < 2 {
        return Err(Error::InvalidArgument("max rank must be at least 2".into()));
    }
    SimpleType::all_up_to(max_rank, false)
        .into_iter()
        .map(classify_type)
        .collect()
}
