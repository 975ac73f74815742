from fastapi import APIRouter

from app.routing.api.v1.mapper import router as mapper_router

router = APIRouter(prefix="/v1")

router.include_router(mapper_router)
