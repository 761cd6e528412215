//! A flag variety `G/P` with everything needed to compute on it.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::root_system::{GroupType, ParabolicData, RootSystem, Weight};
use crate::schubert::{BggEngine, SchubertCalc};
use crate::weyl::{format_word, parse_word, CosetTable, WeylElement, WeylGroup};

/// `G/P` for a supported simple `G` and a standard parabolic `P`.
pub struct FlagVariety {
    group_type: GroupType,
    rs: Arc<RootSystem>,
    weyl: Arc<WeylGroup>,
    parabolic: ParabolicData,
    cosets: Arc<CosetTable>,
    calc: SchubertCalc,
    chi: OnceLock<Vec<Weight>>,
}

impl fmt::Debug for FlagVariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/P{:?}", self.group_type, self.parabolic.crossed)
    }
}

/// Shared data for one group, reusable across parabolics.
#[derive(Clone, Debug)]
pub struct GroupData {
    pub group_type: GroupType,
    pub rs: Arc<RootSystem>,
    pub weyl: Arc<WeylGroup>,
    pub engine: Arc<BggEngine>,
}

impl GroupData {
    pub fn new(group_type: GroupType) -> Result<Self> {
        let rs = Arc::new(RootSystem::from_type(group_type)?);
        let weyl = Arc::new(WeylGroup::new(&rs)?);
        let engine = Arc::new(BggEngine::new(rs.clone(), weyl.clone()));
        Ok(GroupData {
            group_type,
            rs,
            weyl,
            engine,
        })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(GroupType::parse(s)?)
    }

    /// `G/P` with the given crossed nodes `Δ ∖ Δ(P)`.
    pub fn flag_variety(&self, crossed: &[usize]) -> Result<FlagVariety> {
        let parabolic = ParabolicData::from_crossed(&self.rs, crossed)?;
        let cosets = Arc::new(CosetTable::new(&self.rs, &self.weyl, &parabolic));
        let calc = SchubertCalc::new(self.engine.clone(), cosets.clone());
        Ok(FlagVariety {
            group_type: self.group_type,
            rs: self.rs.clone(),
            weyl: self.weyl.clone(),
            parabolic,
            cosets,
            calc,
            chi: OnceLock::new(),
        })
    }
}

impl FlagVariety {
    /// `G/P` from a type such as `"C3"` and crossed nodes.
    pub fn new(group: &str, crossed: &[usize]) -> Result<Self> {
        GroupData::parse(group)?.flag_variety(crossed)
    }

    pub fn group_type(&self) -> GroupType {
        self.group_type
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn parabolic(&self) -> &ParabolicData {
        &self.parabolic
    }

    pub fn cosets(&self) -> &CosetTable {
        &self.cosets
    }

    pub fn schubert(&self) -> &SchubertCalc {
        &self.calc
    }

    pub fn dimension(&self) -> usize {
        self.parabolic.dim_gp
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    pub fn element(&self, w: usize) -> &WeylElement {
        self.cosets.get(w)
    }

    pub fn length(&self, w: usize) -> usize {
        self.cosets.get(w).length()
    }

    pub fn word(&self, w: usize) -> String {
        self.cosets.get(w).word_string()
    }

    /// Position of a `W^P` element given by a word string such as `"1,3,2"`.
    pub fn find(&self, word: &str) -> Result<usize> {
        let letters = parse_word(word)?;
        self.cosets.find_word(&self.rs, &letters).map_err(|_| {
            Error::NotInWP(format!("word '{}' in {self:?}", format_word(&letters)))
        })
    }

    /// `χ_w` for every `W^P` element, in table order.
    pub fn chi_table(&self) -> Result<&[Weight]> {
        if let Some(t) = self.chi.get() {
            return Ok(t);
        }
        let table = (0..self.len())
            .map(|w| crate::deformed::chi(self, w))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.chi.get_or_init(|| table))
    }

    /// `χ_w`.
    pub fn chi(&self, w: usize) -> Result<&Weight> {
        Ok(&self.chi_table()?[w])
    }

    /// `(Δ ∖ Δ(P))` evaluation of a weight: `(λ(x_k))_{k crossed}`.
    pub fn central_values(&self, w: &Weight) -> Vec<crate::Rat> {
        self.parabolic
            .crossed
            .iter()
            .map(|&k| self.rs.eval_at_x(w, k).expect("index in range"))
            .collect()
    }
}
