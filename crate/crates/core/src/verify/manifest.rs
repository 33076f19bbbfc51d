/// Every check id a full run produces, sorted. A run whose id set differs
/// from this list has gained or lost coverage.
pub const CHECK_IDS: &[&str] = &[
    "forms.catalog-shapes",
    "forms.cubic-law",
    "forms.cubic-rank",
    "forms.delta-dual",
    "forms.delta-sum",
    "forms.newton-identities",
    "forms.phi-dual",
    "forms.quadratic-law",
    "forms.r-constants",
    "forms.sextic-law",
    "forms.subgroup-invariance",
    "forms.w-elementary",
    "forms.w-sum",
    "group.h-conjugation",
    "group.h-order",
    "group.h-word",
    "group.order",
    "group.relations",
    "group.subgroup-order",
    "icosahedral.covariant",
    "icosahedral.f-modular",
    "icosahedral.h-modular",
    "icosahedral.hessian",
    "icosahedral.relation",
    "icosahedral.t-modular",
    "invariance.identity-permutation",
    "invariance.identity-trivial",
    "invariance.phi-signs",
    "invariance.phi12",
    "invariance.phi18",
    "invariance.phi20",
    "invariance.phi30",
    "invariance.phi32",
    "invariance.phi42",
    "invariance.phi44",
    "invariance.s-permutation",
    "invariance.syzygy-candidates",
    "invariance.t-permutation",
    "modular.lead-combinations",
    "modular.lead-cubics",
    "modular.lead-phi12",
    "modular.lead-phi18",
    "modular.lead-phi20",
    "modular.lead-phi30",
    "modular.lead-phi32",
    "modular.lead-phi42",
    "modular.lead-phi44",
    "modular.lead-quadratics",
    "modular.lead-sextics",
    "modular.phi12",
    "modular.phi18",
    "modular.phi20",
    "modular.phi30",
    "modular.phi32",
    "modular.phi42",
    "modular.phi44",
    "singularity.eisenstein",
    "singularity.reduction.phi20-phi18",
    "singularity.reduction.phi20-phi30",
    "singularity.reduction.phi20-phi42",
    "singularity.reduction.phi32-phi18",
    "singularity.reduction.phi32-phi30",
    "singularity.reduction.phi32-phi42",
    "singularity.reduction.phi44-phi18",
    "singularity.reduction.phi44-phi30",
    "singularity.reduction.phi44-phi42",
    "singularity.series.phi20-phi18",
    "singularity.series.phi20-phi30",
    "singularity.series.phi20-phi42",
    "singularity.series.phi32-phi18",
    "singularity.series.phi32-phi30",
    "singularity.series.phi32-phi42",
    "singularity.series.phi44-phi18",
    "singularity.series.phi44-phi30",
    "singularity.series.phi44-phi42",
    "theta.inversion",
    "theta.translation",
];
