import sys

from adapters.inbound.cli.app import main

# Запуск из-под виртуального окружения: python src/main.py <подкоманда> ...
if __name__ == "__main__":
    sys.exit(main())
