//! Local data at finite and archimedean places for groups of type B_r:
//! maximal parahoric types, λ-factors, Ξ bounds and Kottwitz signs.

mod lambda;
mod types;

pub use lambda::{
    lambda_factor, lambda_factor_via_orders, reductive_quotient, xi_order, FiniteGroup,
    FiniteGroupOrder,
};
pub use types::{DeletedVertex, Form, LocalPlaceData, ParahoricType};

/// Kottwitz sign at a finite place.
pub fn epsilon_finite(split: bool) -> i32 {
    if split {
        1
    } else {
        -1
    }
}

/// Kottwitz sign at a real place: the identity place carries signature
/// (1, 2r), the others are compact.
pub fn epsilon_archimedean(r: u32, is_identity_place: bool) -> i32 {
    let plus = if is_identity_place {
        matches!(r % 4, 0 | 1)
    } else {
        matches!(r % 4, 0 | 3)
    };
    if plus {
        1
    } else {
        -1
    }
}

/// The product of all Kottwitz signs is +1: the number of -1's among the
/// `d` real places and the nonsplit finite places must be even.
pub fn parity_check(r: u32, degree: u32, finite_nonsplit_count: usize) -> bool {
    let mut minus = finite_nonsplit_count;
    if epsilon_archimedean(r, true) < 0 {
        minus += 1;
    }
    if epsilon_archimedean(r, false) < 0 {
        minus += degree as usize - 1;
    }
    minus % 2 == 0
}

/// Smallest number of nonsplit places that satisfies the parity condition.
pub fn required_nonsplit_parity(r: u32, degree: u32) -> usize {
    if parity_check(r, degree, 0) {
        0
    } else {
        1
    }
}
