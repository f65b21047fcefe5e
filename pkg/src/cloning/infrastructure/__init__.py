"""基础设施层：命令载荷的序列化输出。"""
