# paragame/main.py

from dotenv import load_dotenv
import logging
import os

BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
load_dotenv(os.path.join(BASE_DIR, ".env"))

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from paragame import __version__
from paragame.core.config import settings
from paragame.core.errors import ParaGameError

# ───────────────── ROUTER IMPORTS ─────────────────
from paragame.routes.games import router as games_router
from paragame.routes.qbf import router as qbf_router

logger = logging.getLogger(__name__)


# ───────────────── APP INIT ─────────────────
app = FastAPI(
    title="paragame",
    description="Reachability games against an unknown number of opponents",
    version=__version__,
    docs_url="/docs" if settings.DEBUG else None,
    redoc_url="/redoc" if settings.DEBUG else None,
)


@app.exception_handler(ParaGameError)
async def paragame_exception_handler(request: Request, exc: ParaGameError):
    logger.info("request failed path=%s status=%s detail=%s", request.url.path, exc.status_code, exc.detail)
    content = {"detail": exc.detail}
    diagnostics = getattr(exc, "diagnostics", None)
    if diagnostics:
        content["diagnostics"] = [d.model_dump(mode="json") for d in diagnostics]
    return JSONResponse(status_code=exc.status_code, content=content)


# ───────────────── ROUTES ─────────────────
app.include_router(games_router, prefix="/api")
app.include_router(qbf_router, prefix="/api")


# ───────────────── HEALTH ─────────────────
@app.get("/", tags=["Health"])
async def root():
    return {
        "status": "ok",
        "app": "paragame",
        "env": settings.APP_ENV,
    }


@app.get("/health", tags=["Health"])
async def health():
    return {"status": "healthy"}
