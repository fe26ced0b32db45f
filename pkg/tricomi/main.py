# tricomi/main.py
import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from tricomi import __version__
from tricomi.api.routers import fundsol, verification
from tricomi.core.config import settings, setup_logging
from tricomi.services.specfun import default_policy

log = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    setup_logging()
    log.info("Application Startup...")
    policy = default_policy()
    log.info(f"Series policy: switchover at {policy.switchover_radius}, K series below {policy.k_series_radius}")
    yield
    log.info("Application Shutdown...")

app = FastAPI(
    title=settings.PROJECT_NAME,
    version=__version__,
    openapi_url=f"{settings.API_PREFIX}/openapi.json",
    lifespan=lifespan,
)

# --- Root Endpoint ---
@app.get("/", tags=["Root"])
async def read_root(): return {"message": f"Welcome to the {settings.PROJECT_NAME}!"}

# --- Include Routers ---
app.include_router(fundsol.router, prefix=f"{settings.API_PREFIX}/fundsol", tags=["Fundamental solutions"])
app.include_router(verification.router, prefix=f"{settings.API_PREFIX}/verify", tags=["Verification"])

# --- CORS Middleware ---
app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.CORS_ORIGINS, allow_credentials=True,
    allow_methods=["*"], allow_headers=["*"],
)
