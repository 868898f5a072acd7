//! Betti tables of symmetric rank loci: the closed form, the geometric assembly from
//! bundle cohomology, and explicit generators.

pub mod assemble;
pub mod betti;
pub mod jpw;
pub mod minors;
pub mod xi;

pub use assemble::{assemble, assemble_xi, xi_oracle, CohomologyByDegree, CohomologyClass};
pub use betti::{
    consistency_check, k_polynomial, render_polynomial, BettiEntry, BettiJson, BettiTable, ConsistencyReport,
    JsonParams, Provenance,
};
pub use jpw::{jpw_closed_form, t_bound};
pub use minors::{all_minors, generic_symmetric, minor_generators};
pub use xi::{build_xi_description, BundleDescription, XiSummand};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::schubert::{desing_data, DesingData};

/// Everything `resolve` reports for one `(n, k, r)`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub desing: DesingData,
    /// The resolution of the coordinate ring, when a closed form exists.
    pub table: Option<BettiTable>,
    /// Why `table` is missing.
    pub unsupported: Option<String>,
    /// Push-forward from the enlarged space, for even `k` and `r = n`.
    pub enlarged: Option<BettiTable>,
    pub consistency: Option<ConsistencyReport>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Method {
    ClosedForm,
    Enlarged,
}

pub fn resolve(n: usize, k: usize, r: usize, max_t: Option<usize>) -> Result<Resolution> {
    let desing = desing_data(n, k, r)?;
    if r != n {
        return Ok(Resolution {
            desing,
            table: None,
            unsupported: Some(format!(
                "r = {r} < n = {n}: the bundle xi is not completely reducible, so no closed-form table is produced"
            )),
            enlarged: None,
            consistency: None,
        });
    }
    let table = jpw_closed_form(n, k, max_t)?;
    let consistency = table.consistency_check(desing.codim);
    let enlarged = match build_xi_description(n, k, r) {
        Ok(desc) => {
            let t = assemble_xi(&desc)?;
            if max_t.is_none() && !t.contains(&table) {
                return Err(Error::InvariantBreach(format!(
                    "enlarged-space table for ({n},{k},{r}) does not contain the closed form"
                )));
            }
            Some(t)
        }
        Err(Error::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(Resolution { desing, table: Some(table), unsupported: None, enlarged, consistency: Some(consistency) })
}
