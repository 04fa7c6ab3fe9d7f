"""Python facade for the coupled KPZ / stochastic-heat Monte Carlo lab."""

from ._kpzlab import *  # noqa: F401,F403
