n = eval(input())
b = eval(input())
print(n and b)
print(n or b)
print(not n)
print(n != b)
print(1 if n and not b else 0)
