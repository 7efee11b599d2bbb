"""From-scratch regularized logistic regression.

Full-batch gradient descent from zero initialization on standardized features.
Deterministic by construction: no random initialization, no stochastic
batching, so identical inputs give bit-identical models and the only
randomness in repeated experiments is the data split.

Loss: mean cross-entropy + (l2_lambda / 2N) * ||w||^2, bias unregularized.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

import numpy as np

from .features import FEATURE_SET_DIMS

STD_FLOOR = 1e-8
MODEL_FORMAT_VERSION = 1


class ClassifierError(ValueError):
    pass


@dataclass(frozen=True)
class StandardizationParams:
    means: tuple[float, ...]
    stds: tuple[float, ...]


@dataclass(frozen=True)
class TrainConfig:
    learning_rate: float = 0.1
    l2_lambda: float = 1.0
    max_iterations: int = 5000
    tolerance: float = 1e-8

    def __post_init__(self):
        if self.learning_rate <= 0:
            raise ClassifierError("learning_rate must be positive")
        if self.l2_lambda < 0:
            raise ClassifierError("l2_lambda must be non-negative")
        if self.max_iterations < 0:
            raise ClassifierError("max_iterations must be non-negative")
        if self.tolerance < 0:
            raise ClassifierError("tolerance must be non-negative")


@dataclass(frozen=True)
class TrainedModel:
    feature_set_id: str
    weights: tuple[float, ...]
    bias: float
    standardization: StandardizationParams
    config: TrainConfig
    training_seed: int
    # Diagnostics from the training run; not part of the model file.
    final_loss: float | None = field(default=None, compare=False)
    iterations: int | None = field(default=None, compare=False)


def sigmoid(z):
    """Numerically stable logistic function."""
    z = np.asarray(z, dtype=float)
    return np.exp(-np.logaddexp(0.0, -z))


def fit_standardization(features) -> StandardizationParams:
    """Per-column population mean and std, std floored at 1e-8."""
    X = np.asarray(features, dtype=float)
    if X.ndim != 2 or X.shape[0] < 1:
        raise ClassifierError("fit_standardization requires a non-empty 2-D matrix")
    means = X.mean(axis=0)
    stds = np.maximum(X.std(axis=0), STD_FLOOR)
    return StandardizationParams(means=tuple(means.tolist()), stds=tuple(stds.tolist()))


def standardize(features, params: StandardizationParams):
    X = np.asarray(features, dtype=float)
    return (X - np.asarray(params.means)) / np.asarray(params.stds)


def loss_and_gradient(Xs, y, w, b: float, l2_lambda: float):
    """Regularized log-loss and its analytic gradient at (w, b).

    Xs is the standardized design matrix. Returns (loss, grad_w, grad_b).
    """
    Xs = np.asarray(Xs, dtype=float)
    y = np.asarray(y, dtype=float)
    w = np.asarray(w, dtype=float)
    n = Xs.shape[0]
    z = Xs @ w + b
    loss = float(np.mean(np.logaddexp(0.0, z) - y * z) + l2_lambda / (2.0 * n) * (w @ w))
    p = sigmoid(z)
    grad_w = Xs.T @ (p - y) / n + (l2_lambda / n) * w
    grad_b = float(np.mean(p - y))
    return loss, grad_w, grad_b


def train_logreg(
    features,
    labels,
    config: TrainConfig = TrainConfig(),
    feature_set_id: str = "punctuation",
    training_seed: int = 0,
    history: list | None = None,
) -> TrainedModel:
    """Fit weights by full-batch gradient descent.

    Stops after max_iterations steps or as soon as the loss decrease of a step
    falls below config.tolerance. If `history` is given, the loss after every
    step is appended to it.
    """
    X = np.asarray(features, dtype=float)
    y = np.asarray(labels, dtype=float)
    if X.ndim != 2:
        raise ClassifierError("features must be a 2-D matrix")
    if X.shape[0] != y.shape[0]:
        raise ClassifierError(
            f"row count {X.shape[0]} does not match label count {y.shape[0]}"
        )
    if X.shape[0] < 2:
        raise ClassifierError("training requires at least 2 rows")
    if not set(np.unique(y)) <= {0.0, 1.0}:
        raise ClassifierError("labels must be 0 or 1")
    if len(np.unique(y)) < 2:
        raise ClassifierError("training requires both classes present")
    if feature_set_id in FEATURE_SET_DIMS and X.shape[1] != FEATURE_SET_DIMS[feature_set_id]:
        raise ClassifierError(
            f"feature set {feature_set_id!r} has dimension "
            f"{FEATURE_SET_DIMS[feature_set_id]}, got matrix with {X.shape[1]} columns"
        )

    params = fit_standardization(X)
    Xs = standardize(X, params)
    w = np.zeros(X.shape[1])
    b = 0.0
    prev_loss, _, _ = loss_and_gradient(Xs, y, w, b, config.l2_lambda)
    iterations = 0
    for _ in range(config.max_iterations):
        _, grad_w, grad_b = loss_and_gradient(Xs, y, w, b, config.l2_lambda)
        w = w - config.learning_rate * grad_w
        b = b - config.learning_rate * grad_b
        iterations += 1
        loss, _, _ = loss_and_gradient(Xs, y, w, b, config.l2_lambda)
        if history is not None:
            history.append(loss)
        decrease = prev_loss - loss
        prev_loss = loss
        if decrease < config.tolerance:
            break
    return TrainedModel(
        feature_set_id=feature_set_id,
        weights=tuple(w.tolist()),
        bias=float(b),
        standardization=params,
        config=config,
        training_seed=training_seed,
        final_loss=prev_loss,
        iterations=iterations,
    )


def predict_proba(model: TrainedModel, feature_vector) -> float:
    """Probability that one document is machine-generated."""
    x = np.asarray(feature_vector, dtype=float)
    if x.shape != (len(model.weights),):
        raise ClassifierError(
            f"expected feature vector of length {len(model.weights)}, got shape {x.shape}"
        )
    xs = (x - np.asarray(model.standardization.means)) / np.asarray(model.standardization.stds)
    return float(sigmoid(xs @ np.asarray(model.weights) + model.bias))


def predict_proba_batch(model: TrainedModel, features) -> np.ndarray:
    X = np.asarray(features, dtype=float)
    if X.ndim != 2 or X.shape[1] != len(model.weights):
        raise ClassifierError(
            f"expected matrix with {len(model.weights)} columns, got shape {X.shape}"
        )
    Xs = standardize(X, model.standardization)
    return sigmoid(Xs @ np.asarray(model.weights) + model.bias)


def ensemble_proba(probabilities) -> float:
    """Arithmetic mean of per-model probabilities."""
    probs = list(probabilities)
    if not probs:
        raise ClassifierError("ensemble_proba requires at least one probability")
    return float(sum(probs) / len(probs))


def model_to_dict(model: TrainedModel) -> dict:
    return {
        "feature_set_id": model.feature_set_id,
        "weights": list(model.weights),
        "bias": model.bias,
        "means": list(model.standardization.means),
        "stds": list(model.standardization.stds),
        "config": {
            "learning_rate": model.config.learning_rate,
            "l2_lambda": model.config.l2_lambda,
            "max_iterations": model.config.max_iterations,
            "tolerance": model.config.tolerance,
        },
        "training_seed": model.training_seed,
        "format_version": MODEL_FORMAT_VERSION,
    }


def model_from_dict(data: dict) -> TrainedModel:
    try:
        feature_set_id = data["feature_set_id"]
        weights = tuple(float(v) for v in data["weights"])
        bias = float(data["bias"])
        means = tuple(float(v) for v in data["means"])
        stds = tuple(float(v) for v in data["stds"])
        config = TrainConfig(**data["config"])
        training_seed = int(data["training_seed"])
    except (KeyError, TypeError) as exc:
        raise ClassifierError(f"malformed model file: {exc}") from None
    if not (len(weights) == len(means) == len(stds)):
        raise ClassifierError("model file: weights/means/stds lengths differ")
    if feature_set_id in FEATURE_SET_DIMS and len(weights) != FEATURE_SET_DIMS[feature_set_id]:
        raise ClassifierError(
            f"model file: feature set {feature_set_id!r} expects "
            f"{FEATURE_SET_DIMS[feature_set_id]} weights, found {len(weights)}"
        )
    return TrainedModel(
        feature_set_id=feature_set_id,
        weights=weights,
        bias=bias,
        standardization=StandardizationParams(means=means, stds=stds),
        config=config,
        training_seed=training_seed,
    )


def save_model(model: TrainedModel, path) -> None:
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(model_to_dict(model), fh, indent=2)
        fh.write("\n")
    os.replace(tmp, path)


def load_model(path) -> TrainedModel:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ClassifierError(f"{path}: malformed JSON ({exc.msg})") from None
    return model_from_dict(data)
