"""Uniform random subspaces of GF(q)^n and k-subsets of {1..n}, with exact counting,
rank/unrank codecs and moment experiments."""

from .codec import rank_subset, rank_subspace, unrank_subset, unrank_subspace
from .echelon import DenseMatrix, EchelonMatrix, canonical_form, enumerate_all, is_echelon, pivots_of
from .errors import *  # noqa: F401,F403
from .exactcount import CoinSpec, binomial, qbinomial, qfactorial, subset_coin, subspace_coin
from .gf import FieldElement, FieldSpec, fe_add, fe_inv, fe_mul, fe_neg, fe_sub, make_field
from .rng import DEFAULT_SEED, RngStream, uniform_below
from .sampler import SubsetSample, bernoulli_exact, random_subset, random_subspace, random_vector
from .stats import (
    ExactMoments,
    MomentSummary,
    chi_square_subset_uniformity,
    chi_square_uniformity,
    count_pattern,
    count_symbol,
    exact_symbol_moments,
    min_weight,
    sample_moments,
)
