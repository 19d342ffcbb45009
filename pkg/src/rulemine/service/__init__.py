"""HTTP service exposing the mining pipeline. Run with uvicorn:

    uvicorn rulemine.service:app
"""

from .app import app, create_app

__all__ = ["app", "create_app"]
