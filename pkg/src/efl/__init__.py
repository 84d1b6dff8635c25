from ._kernels import BACKEND

__all__ = ["BACKEND"]
