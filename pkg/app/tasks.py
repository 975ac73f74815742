from celery import Celery

from app.config import settings

app = Celery(
    "image_mapper",
    broker=settings.CELERY_BROKER,
    backend=settings.CELERY_RESULT_BACKEND,
)
app.conf.task_track_started = True

app.autodiscover_tasks([
    "app.workers",
])
