import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'example.settings')
django.setup()
