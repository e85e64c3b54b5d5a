"""
axipot/data_models/riesz.py

Per-mode blocks of the boundary Gram matrix of an annulus.

Contains:
- GramBlock: The 2x2 block M_n with its determinant and eigenvalues
"""

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class GramBlock(BaseModel):
    """
    M_n = [[1 + |q|^2, conj(p) + q], [p + conj(q), 1 + |p|^2]] for the pair of annulus
    family members sharing the Fourier mode n, where q = Q(ch tau1)/Q(ch tau0) and
    p = P(ch tau0)/P(ch tau1) with degree |n| - 1/2 and order (m-1)/2.

    Fields:
        n (int): Fourier mode
        entries (list[list[complex]]): The Hermitian 2x2 block
        det (complex): Determinant of entries, |1 - pq|^2 in exact arithmetic
        eig_min (float): Smaller eigenvalue, > 0
        eig_max (float): Larger eigenvalue
        q_ratio (complex): q
        p_ratio (complex): p
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., description="Fourier mode")
    entries: list[list[complex]] = Field(..., description="The Hermitian 2x2 block")
    det: complex = Field(..., description="Determinant of entries")
    eig_min: float = Field(..., gt=0, description="Smaller eigenvalue")
    eig_max: float = Field(..., description="Larger eigenvalue")
    q_ratio: complex = Field(..., description="Q(ch tau1)/Q(ch tau0)")
    p_ratio: complex = Field(..., description="P(ch tau0)/P(ch tau1)")

    @field_validator("entries")
    @classmethod
    def check_shape(cls, value: list[list[complex]]) -> list[list[complex]]:
        """Exactly two rows of two entries."""
        if len(value) != 2 or any(len(row) != 2 for row in value):
            raise ValueError("a Gram block is 2x2")
        return value

    @model_validator(mode="after")
    def check_hermitian(self) -> "GramBlock":
        """Real diagonal, conjugate off-diagonal, ordered eigenvalues."""
        (a, b), (c, d) = self.entries
        if a.imag != 0.0 or d.imag != 0.0 or c != b.conjugate():
            raise ValueError(f"Gram block for n={self.n} is not Hermitian")
        if self.eig_min > self.eig_max:
            raise ValueError(f"eig_min={self.eig_min} exceeds eig_max={self.eig_max}")
        return self

    @property
    def offset_norm(self) -> float:
        """||M_n - I|| in the max-row-sum norm, formed from the ratios without cancellation."""
        cross = abs(self.entries[0][1])
        return max(abs(self.q_ratio) ** 2, abs(self.p_ratio) ** 2) + cross

    @property
    def det_defect(self) -> float:
        """1 - det M_n = 2 Re(pq) - |pq|^2, accurate when the block is close to I."""
        product = self.q_ratio * self.p_ratio
        return 2.0 * product.real - abs(product) ** 2

    def to_summary(self) -> dict[str, object]:
        """The per-mode record of the gram report."""
        return {
            "n": self.n,
            "det": self.det.real,
            "eig_min": self.eig_min,
            "eig_max": self.eig_max,
        }
