x = eval(input())
y = eval(input())
b = x + y
print(b)
print(b + 2)
print(b == x + y)
print([x, y, b])
