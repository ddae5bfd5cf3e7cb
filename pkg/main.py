import importlib
from contextlib import asynccontextmanager
from pathlib import Path

from fastapi import FastAPI
from fastapi.middleware.gzip import GZipMiddleware

from services.corpus import CorpusService


@asynccontextmanager
async def lifespan(app: FastAPI):
    CorpusService.loadCorpus()
    yield


app = FastAPI(
    lifespan=lifespan,
    title="Polysym",
    summary="ポリマトロイドの対称関数不変量",
    description="P, H, G and their specializations for discrete polymatroids",
)
app.add_middleware(GZipMiddleware, minimum_size=1000)


moduleList = sorted((Path(__file__).resolve().parent / "routes").glob("*.py"))
for module in moduleList:
    app.include_router(importlib.import_module(f"routes.{module.stem}").router)
