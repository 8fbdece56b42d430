from .corr import design_corr
from .css import design_css
from .wecorr import design_wecorr

__all__ = ["design_corr", "design_css", "design_wecorr"]
